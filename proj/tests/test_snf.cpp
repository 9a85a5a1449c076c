#include <doctest.h>

#include <random>

#include "support.hpp"

using namespace magni;
using namespace magni::testing;

namespace {

void check_postconditions(const IntMat& m, const SmithNormalForm& snf) {
    const int rows = static_cast<int>(m.size());
    const int cols = rows ? static_cast<int>(m[0].size()) : 0;

    // U*M*V = D
    if (rows && cols) {
        IntMat umv = mat_mul(mat_mul(snf.u, m), snf.v);
        CHECK(umv == snf.d);
    }
    // Diagonal, non-negative, divisibility chain.
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            if (i != j) CHECK(snf.d[i][j] == 0);
    for (size_t i = 0; i < snf.diagonal.size(); ++i) {
        CHECK(snf.diagonal[i] > 0);
        if (i + 1 < snf.diagonal.size()) CHECK(snf.diagonal[i + 1] % snf.diagonal[i] == 0);
    }
    // Unimodularity via an independent determinant.
    Int det_u = bareiss_det(snf.u);
    Int det_v = bareiss_det(snf.v);
    CHECK((det_u == 1 || det_u == -1));
    CHECK((det_v == 1 || det_v == -1));
}

} // namespace

TEST_CASE("SNF of the zero matrix") {
    IntMat z(3, std::vector<Int>(3, Int(0)));
    auto snf = smith_normal_form(z);
    CHECK(snf.d == z);
    CHECK(snf.u == identity_matrix(3));
    CHECK(snf.v == identity_matrix(3));
    CHECK(snf.rank() == 0);
}

TEST_CASE("SNF normalizes diag(2,3) to diag(1,6)") {
    IntMat m{{Int(2), Int(0)}, {Int(0), Int(3)}};
    auto snf = smith_normal_form(m);
    CHECK(snf.diagonal == std::vector<Int>{Int(1), Int(6)});
    check_postconditions(m, snf);
}

TEST_CASE("SNF of a rank-1 matrix") {
    IntMat m{{Int(1), Int(1)}, {Int(1), Int(1)}};
    auto snf = smith_normal_form(m);
    CHECK(snf.diagonal == std::vector<Int>{Int(1)});
    CHECK(snf.d[1][1] == 0);
    check_postconditions(m, snf);
}

TEST_CASE("SNF handles negative entries and rectangles") {
    IntMat m{{Int(-4), Int(6), Int(2)}, {Int(2), Int(-2), Int(4)}};
    auto snf = smith_normal_form(m);
    check_postconditions(m, snf);
    CHECK(snf.rank() == 2);
}

TEST_CASE("SNF postconditions on random matrices") {
    std::mt19937 rng(20260809);
    std::uniform_int_distribution<int> dim(1, 8), entry(-9, 9);
    for (int trial = 0; trial < 100; ++trial) {
        int r = dim(rng), c = dim(rng);
        IntMat m(r, std::vector<Int>(c));
        for (auto& row : m)
            for (auto& x : row) x = entry(rng);
        auto snf = smith_normal_form(m);
        check_postconditions(m, snf);
    }
}
