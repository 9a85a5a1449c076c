#pragma once

#include <string>
#include <vector>

#include "magni/metric_space.hpp"
#include "magni/rational_function.hpp"

namespace magni {

// Matrix of monomials u^(e_ij) with e_ij = N * dist(i,j), N the lcm of all
// distance denominators.
struct ZetaMatrix {
    int size = 0;
    int exponent_denominator = 1;
    std::vector<std::vector<long>> exponents;
};

// Truncated grade-indexed series: strictly increasing grades, no zero
// coefficients stored.
struct GradedSeries {
    std::vector<std::pair<Rat, Int>> terms;
    Rat l_max;

    Int coefficient(const Rat& grade) const {
        for (const auto& [g, c] : terms)
            if (g == grade) return c;
        return Int(0);
    }
    std::string to_tsv() const;
};

// Requires finite_distances and zero_diagonal. Throws ValidationError (InfiniteDistance).
ZetaMatrix zeta_matrix(const FiniteMetricSpace& space);

// Sum of all entries of the inverse zeta matrix, as an exact reduced rational
// function; fraction-free (Bareiss) elimination over the polynomial ring.
// Throws ValidationError (SingularZeta) if the zeta matrix is singular.
RationalFunctionQ magnitude_rational(const FiniteMetricSpace& space);

struct MagnitudeEval {
    std::string decimal;   // value rounded to `digits` decimal places
    double approx;         // double view of the same value
};

// Magnitude function at q = e^(-t): evaluates the reduced rational function
// with MPFR and cross-checks against direct numeric inversion of the real zeta
// matrix; the two paths must agree to the requested precision.
// Throws ValidationError (PoleAtEvaluationPoint) when the denominator vanishes
// within precision.
MagnitudeEval magnitude_function_eval(const FiniteMetricSpace& space, const Rat& t, int digits);

// Chain-level signed tuple counts: coefficient of q^l is
// sum over n of (-1)^n * #{nondegenerate tuples of degree n, length exactly l},
// for every grade l <= l_max. Requires a separated space.
GradedSeries magnitude_series(const FiniteMetricSpace& space, const Rat& l_max);

// Power-series expansion of f in u up to exponent N*l_max (ascending long
// division). Grades are e/N; throws ValidationError (DenominatorConstantTermZero)
// when the constant term of the denominator vanishes.
std::vector<std::pair<Rat, Rat>> expand_power_series(const RationalFunctionQ& f, const Rat& l_max);

struct SeriesMatch {
    bool matches = true;
    Rat first_mismatch_grade;
    Rat series_value;      // 0 when the grade is absent from the series
    Rat expansion_value;
};

// Gradewise comparison of a truncated series against the expansion of f.
SeriesMatch series_matches_rational(const GradedSeries& series, const RationalFunctionQ& f,
                                    const Rat& l_max);

} // namespace magni
