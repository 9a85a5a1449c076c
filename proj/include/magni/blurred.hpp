#pragma once

#include "magni/persistence.hpp"
#include "magni/snf.hpp"

namespace magni {

// Blurred magnitude homology as the persistent homology of the enriched nerve.
// Degrees k <= dim_max - 1 are complete; higher degrees are flagged via
// Barcode::complete_below_degree.
Barcode blurred_mh(const FiniteMetricSpace& space, int dim_max, const Rat& eps_max, int p,
                   const ComplexOptions& opts = {});

// The chain complex with degree-n part free on the tuples of length <= eps
// (all tuples, including degenerate ones, unless normalized is requested) and
// the full simplicial boundary. Independent oracle for blurred_mh.
struct CoendComplex {
    Rat eps;
    int n_max = 0;
    bool includes_degenerate = true;
    std::vector<long long> generator_counts; // per degree 0..n_max
    std::vector<IntMat> boundaries;          // boundaries[n]: degree n -> n-1, n in 1..n_max
};

CoendComplex coend_complex_at(const FiniteMetricSpace& space, const Rat& eps, int n_max,
                              bool include_degenerate = true,
                              long long max_generators = 2'000'000);

// Homology ranks of the coend complex over F_p for degrees 0..n_max-1 (the top
// degree needs the next boundary and is not reported).
std::vector<int> coend_homology_ranks(const CoendComplex& complex, int p);

} // namespace magni
