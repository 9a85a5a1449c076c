#pragma once

#include <vector>

#include "magni/rational.hpp"

namespace magni {

using IntMat = std::vector<std::vector<Int>>;

IntMat identity_matrix(int n);
IntMat mat_mul(const IntMat& a, const IntMat& b);

// U * M * V = D with D diagonal, d_1 | d_2 | ... | d_r, all non-negative,
// and U, V unimodular. Pivots on minimal-absolute-value entries to control
// coefficient growth.
struct SmithNormalForm {
    IntMat d, u, v;
    std::vector<Int> diagonal; // the nonzero invariant factors, in order
    int rank() const { return static_cast<int>(diagonal.size()); }
};

SmithNormalForm smith_normal_form(const IntMat& m);

// Rank over the rationals (equals the SNF rank); via the SNF.
int integer_rank(const IntMat& m);

} // namespace magni
