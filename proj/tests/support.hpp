#pragma once

#include <random>
#include <vector>

#include "magni/metric_space.hpp"
#include "magni/rational_function.hpp"
#include "magni/snf.hpp"

namespace magni::testing {

inline ExtRat er(long num, long den = 1) { return ExtRat(make_rat(num, den)); }

inline FiniteMetricSpace one_point() {
    return FiniteMetricSpace::validate({{er(0)}}, {"a"}, default_required_flags());
}

inline FiniteMetricSpace two_points(const Rat& d) {
    return FiniteMetricSpace::validate({{ExtRat(0), ExtRat(d)}, {ExtRat(d), ExtRat(0)}},
                                       {"a", "b"}, default_required_flags());
}

// Collinear a--b--c with gaps 1, 1 (so d(a,c) = 2).
inline FiniteMetricSpace t3() {
    return FiniteMetricSpace::validate(
        {{er(0), er(1), er(2)}, {er(1), er(0), er(1)}, {er(2), er(1), er(0)}}, {"a", "b", "c"},
        default_required_flags());
}

// Equilateral triangle with all distances 1.
inline FiniteMetricSpace e3() {
    return FiniteMetricSpace::validate(
        {{er(0), er(1), er(1)}, {er(1), er(0), er(1)}, {er(1), er(1), er(0)}}, {"a", "b", "c"},
        default_required_flags());
}

// Random separated symmetric space with m points, distances drawn from the
// given values, resampled until the triangle inequality holds.
inline FiniteMetricSpace random_space(std::mt19937& rng, int m, const std::vector<Rat>& values) {
    std::uniform_int_distribution<size_t> pick(0, values.size() - 1);
    for (int attempt = 0; attempt < 100000; ++attempt) {
        FiniteMetricSpace::Matrix d(m, std::vector<ExtRat>(m, ExtRat(0)));
        for (int i = 0; i < m; ++i)
            for (int j = i + 1; j < m; ++j) d[i][j] = d[j][i] = ExtRat(values[pick(rng)]);
        bool triangle = true;
        for (int i = 0; i < m && triangle; ++i)
            for (int j = 0; j < m && triangle; ++j)
                for (int k = 0; k < m; ++k)
                    if (d[i][j] + d[j][k] < d[i][k]) {
                        triangle = false;
                        break;
                    }
        if (triangle) return FiniteMetricSpace::validate(std::move(d), default_required_flags());
    }
    throw std::runtime_error("random_space: no triangle-valid sample found");
}

// Random distinct points on the integer grid [0, side)^2 under L1.
inline FiniteMetricSpace random_l1_grid(std::mt19937& rng, int m, int side) {
    std::uniform_int_distribution<int> coord(0, side - 1);
    std::vector<std::pair<int, int>> pts;
    while (static_cast<int>(pts.size()) < m) {
        std::pair<int, int> p{coord(rng), coord(rng)};
        bool dup = false;
        for (auto& q : pts) dup = dup || q == p;
        if (!dup) pts.push_back(p);
    }
    FiniteMetricSpace::Matrix d(m, std::vector<ExtRat>(m, ExtRat(0)));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            d[i][j] = er(std::abs(pts[i].first - pts[j].first) +
                         std::abs(pts[i].second - pts[j].second));
    return FiniteMetricSpace::validate(std::move(d), default_required_flags());
}

// Independent oracle: symbolic inverse-sum via the cofactor formula, for
// matrices up to 3x3 over the rational-function field. Never calls the
// library's elimination path.
inline RationalFunctionQ cofactor_magnitude(const FiniteMetricSpace& space) {
    const int m = space.size();
    int n_lcm = 1;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            n_lcm = static_cast<int>(std::lcm(static_cast<long>(n_lcm),
                                              space.dist(i, j).finite().get_den().get_si()));
    auto entry = [&](int i, int j) {
        Rat e = space.dist(i, j).finite() * n_lcm;
        return RationalFunctionQ(n_lcm, IntPoly::monomial(Int(1), static_cast<int>(e.get_num().get_si())),
                                 IntPoly::constant(1));
    };
    auto det2 = [&](int r0, int r1, int c0, int c1) {
        return entry(r0, c0) * entry(r1, c1) - entry(r0, c1) * entry(r1, c0);
    };
    RationalFunctionQ det, total;
    if (m == 1) {
        det = entry(0, 0);
        total = RationalFunctionQ(1, IntPoly::constant(1), IntPoly::constant(1));
    } else if (m == 2) {
        det = det2(0, 1, 0, 1);
        // adj = [[z11, -z01], [-z10, z00]]
        total = entry(1, 1) - entry(0, 1) - entry(1, 0) + entry(0, 0);
    } else if (m == 3) {
        det = entry(0, 0) * det2(1, 2, 1, 2) - entry(0, 1) * det2(1, 2, 0, 2) +
              entry(0, 2) * det2(1, 2, 0, 1);
        total = RationalFunctionQ();
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                int r0 = j == 0 ? 1 : 0, r1 = j == 2 ? 1 : 2;
                int c0 = i == 0 ? 1 : 0, c1 = i == 2 ? 1 : 2;
                RationalFunctionQ minor = det2(r0, r1, c0, c1);
                total = (i + j) % 2 == 0 ? total + minor : total - minor;
            }
    } else {
        throw std::runtime_error("cofactor oracle only supports up to 3 points");
    }
    return total / det;
}

// Integer determinant by fraction-free (Bareiss) elimination; used to verify
// unimodularity of SNF transforms independently of the SNF code.
inline Int bareiss_det(IntMat a) {
    const int n = static_cast<int>(a.size());
    if (n == 0) return Int(1);
    Int prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (a[k][k] == 0) {
            int pivot = -1;
            for (int i = k + 1; i < n; ++i)
                if (a[i][k] != 0) {
                    pivot = i;
                    break;
                }
            if (pivot < 0) return Int(0);
            std::swap(a[k], a[pivot]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) {
                Int num = a[k][k] * a[i][j] - a[i][k] * a[k][j];
                mpz_divexact(a[i][j].get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
        prev = a[k][k];
    }
    return sign > 0 ? a[n - 1][n - 1] : -a[n - 1][n - 1];
}

} // namespace magni::testing
