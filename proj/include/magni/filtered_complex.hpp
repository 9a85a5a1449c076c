#pragma once

#include <string>
#include <vector>

#include "magni/metric_space.hpp"

namespace magni {

enum class FiltrationKind { nerve, rips };

struct Cell {
    int id = 0;
    int dim = 0;
    Rat filtration;
    std::vector<int> vertices; // the defining tuple, in construction order
    std::vector<std::pair<int, int>> boundary; // (cell id, sign)
};

// Sublevel-filtered complex: cells sorted by (filtration, dimension, tuple),
// every boundary cell preceding the cell it bounds.
struct FilteredComplex {
    FiltrationKind kind = FiltrationKind::nerve;
    int dim_max = 0;
    Rat eps_max;
    std::vector<Cell> cells;

    // Distinct filtration values, ascending.
    std::vector<Rat> critical_values() const;
    // Throws ValidationError (UnsortedComplex) when the ordering or
    // monotonicity invariants fail.
    void check_invariants() const;
    std::string to_text() const;
};

struct ComplexOptions {
    long long max_cells = 2'000'000;
};

// One cell per nondegenerate tuple of degree <= dim_max with length <= eps_max;
// filtration = tuple length; ordinary simplicial boundary (faces that become
// degenerate contribute 0). Requires a separated space with the triangle
// inequality (which makes the filtration sublevel-monotone).
FilteredComplex build_enriched_nerve(const FiniteMetricSpace& space, int dim_max,
                                     const Rat& eps_max, const ComplexOptions& opts = {});

// One cell per strictly increasing vertex tuple of size <= dim_max+1 with
// diameter <= eps_max; filtration = diameter. Requires a symmetric separated
// space with the triangle inequality.
FilteredComplex build_vietoris_rips(const FiniteMetricSpace& space, int dim_max,
                                    const Rat& eps_max, const ComplexOptions& opts = {});

} // namespace magni
