#pragma once

#include <map>
#include <string>
#include <vector>

#include "magni/magnitude.hpp"
#include "magni/metric_space.hpp"
#include "magni/snf.hpp"

namespace magni {

enum class ChainMode { normalized, unnormalized };

// Generators and integer boundary at fixed (degree n, grade l). Every
// generator has length exactly l; the boundary keeps only length-preserving
// faces, mapping into the (n-1, l) block.
struct GradedChainBlock {
    int degree = 0;
    Rat grade;
    std::vector<Tuple> generators;
    IntMat boundary; // rows: (n-1, l) generators, cols: this block's generators
};

struct HomologyGroup {
    int rank = 0;
    std::vector<Int> torsion; // each >= 2, each dividing the next

    bool trivial() const { return rank == 0 && torsion.empty(); }
    bool operator==(const HomologyGroup& o) const {
        return rank == o.rank && torsion == o.torsion;
    }
};

struct MHTable {
    std::map<std::pair<Rat, int>, HomologyGroup> groups; // keyed (grade, degree)
    int n_max = 0;
    Rat l_max;
    std::vector<Rat> spectrum;

    const HomologyGroup* find(int n, const Rat& l) const {
        auto it = groups.find({l, n});
        return it == groups.end() ? nullptr : &it->second;
    }
    std::string to_tsv() const;
};

// All tuples of degree n and length exactly l, lexicographically ordered;
// normalized mode excludes tuples with a consecutive repeat.
std::vector<Tuple> mh_generators(const FiniteMetricSpace& space, int n, const Rat& l,
                                 ChainMode mode);

// Alternating sum of the length-preserving faces: interior face i survives iff
// d(x_{i-1},x_i) + d(x_i,x_{i+1}) = d(x_{i-1},x_{i+1}); end faces survive iff
// the dropped step has distance 0. In normalized mode, faces landing on a
// degenerate tuple contribute 0.
IntMat mh_boundary(const FiniteMetricSpace& space, const std::vector<Tuple>& from_gens,
                   const std::vector<Tuple>& to_gens, ChainMode mode);

struct MHOptions {
    ChainMode mode = ChainMode::normalized;
    long long max_generators = 2'000'000;
};

// Homology of the grade-by-grade chain complex: for each grade in the length
// spectrum and each degree 0..n_max, rank and torsion via Smith normal forms.
// Verifies boundary * boundary = 0 per grade and aborts if it fails.
MHTable magnitude_homology(const FiniteMetricSpace& space, int n_max, const Rat& l_max,
                           const MHOptions& opts = {});

struct EulerRow {
    Rat grade;
    Int chi;             // sum over n of (-1)^n rank H_n at this grade
    Int series_coeff;    // signed tuple count
    Rat expansion_coeff; // power-series coefficient of the magnitude
    bool ok = false;
};

struct EulerReport {
    std::vector<EulerRow> rows;
    bool all_ok = true;
    std::string to_tsv() const;
};

// Three-way check per grade l <= l_max: homology Euler characteristic vs the
// signed tuple counts vs the expansion of the exact magnitude. Requires
// n_max * delta_min >= l_max so every grade has all its degrees present
// (InsufficientDegreeBound otherwise).
EulerReport euler_check(const FiniteMetricSpace& space, int n_max, const Rat& l_max,
                        const MHOptions& opts = {});

// MAGNIPERSIST_THREADS, clamped to [1, hardware]; used for per-grade work.
int worker_count();

} // namespace magni
