#include "magni/magnitude.hpp"

#include <boost/multiprecision/mpfr.hpp>

#include <climits>
#include <cstdint>
#include <iomanip>
#include <map>
#include <numeric>
#include <sstream>

#include "magni/errors.hpp"

namespace magni {

using BigFloat = boost::multiprecision::mpfr_float;

std::string GradedSeries::to_tsv() const {
    std::string out;
    for (const auto& [g, c] : terms) out += to_string(g) + "\t" + c.get_str() + "\n";
    return out;
}

ZetaMatrix zeta_matrix(const FiniteMetricSpace& space) {
    if (!space.flags().finite_distances)
        throw ValidationError("InfiniteDistance: zeta matrix requires finite distances");
    space.require(Flag::zero_diagonal);
    const int m = space.size();

    Int n_lcm = 1;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            Int den = space.dist(i, j).finite().get_den();
            mpz_lcm(n_lcm.get_mpz_t(), n_lcm.get_mpz_t(), den.get_mpz_t());
        }
    if (!n_lcm.fits_sint_p())
        throw ResourceBoundError("zeta exponent denominator", n_lcm.get_si(), INT32_MAX);

    ZetaMatrix z;
    z.size = m;
    z.exponent_denominator = static_cast<int>(n_lcm.get_si());
    z.exponents.assign(m, std::vector<long>(m, 0));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            Rat e = space.dist(i, j).finite() * Rat(n_lcm);
            if (e.get_den() != 1) throw InternalCheckError("zeta exponent not integral");
            if (!e.get_num().fits_slong_p())
                throw ResourceBoundError("zeta exponent", 0, LONG_MAX);
            z.exponents[i][j] = e.get_num().get_si();
        }
    return z;
}

// Fraction-free forward elimination (Bareiss) on [Z | ones], then exact back
// substitution producing y = adj(Z) * ones, so that sum(inverse entries) =
// sum(y) / det. Division steps are exact in Z[u].
static std::pair<IntPoly, std::vector<IntPoly>> bareiss_adjugate_row_sums(
    std::vector<std::vector<IntPoly>> a) {
    const int n = static_cast<int>(a.size());
    for (auto& row : a) row.push_back(IntPoly::constant(1)); // augment with ones

    IntPoly prev = IntPoly::constant(1);
    for (int k = 0; k < n; ++k) {
        if (a[k][k].is_zero()) {
            int pivot = -1;
            for (int i = k + 1; i < n; ++i)
                if (!a[i][k].is_zero()) {
                    pivot = i;
                    break;
                }
            if (pivot < 0) return {IntPoly(), {}};
            std::swap(a[k], a[pivot]);
            for (auto& e : a[k]) e = -e; // row swap flips the determinant sign
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j <= n; ++j)
                a[i][j] = IntPoly::div_exact(a[k][k] * a[i][j] - a[i][k] * a[k][j], prev);
            a[i][k] = IntPoly();
        }
        prev = a[k][k];
    }
    IntPoly det = a[n - 1][n - 1];
    if (det.is_zero()) return {IntPoly(), {}};

    // y_i = det * x_i stays in the ring; the division by the diagonal is exact.
    std::vector<IntPoly> y(n);
    for (int i = n - 1; i >= 0; --i) {
        IntPoly acc = det * a[i][n];
        for (int j = i + 1; j < n; ++j) acc = acc - a[i][j] * y[j];
        y[i] = IntPoly::div_exact(acc, a[i][i]);
    }
    return {det, y};
}

RationalFunctionQ magnitude_rational(const FiniteMetricSpace& space) {
    ZetaMatrix z = zeta_matrix(space);
    const int m = z.size;
    std::vector<std::vector<IntPoly>> zp(m, std::vector<IntPoly>(m));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            zp[i][j] = IntPoly::monomial(Int(1), static_cast<int>(z.exponents[i][j]));

    auto [det, y] = bareiss_adjugate_row_sums(std::move(zp));
    if (det.is_zero())
        throw ValidationError("SingularZeta: zeta matrix is not invertible over Q(q^(1/N))");
    IntPoly total;
    for (const auto& yi : y) total = total + yi;
    return RationalFunctionQ(z.exponent_denominator, total, det);
}

static BigFloat eval_poly(const IntPoly& p, const BigFloat& x) {
    BigFloat acc(0);
    const auto& c = p.coeffs();
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
        acc *= x;
        acc += BigFloat(it->get_mpz_t());
    }
    return acc;
}

// Direct numeric route: solve Z * x = ones with partial pivoting and sum x.
static BigFloat numeric_zeta_inverse_sum(const FiniteMetricSpace& space, const BigFloat& t,
                                         const BigFloat& tiny) {
    const int m = space.size();
    std::vector<std::vector<BigFloat>> a(m, std::vector<BigFloat>(m + 1, BigFloat(0)));
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) {
            BigFloat d(space.dist(i, j).finite().get_mpq_t());
            a[i][j] = exp(-t * d);
        }
        a[i][m] = 1;
    }
    for (int k = 0; k < m; ++k) {
        int pivot = k;
        for (int i = k + 1; i < m; ++i)
            if (abs(a[i][k]) > abs(a[pivot][k])) pivot = i;
        if (abs(a[pivot][k]) < tiny)
            throw ValidationError("PoleAtEvaluationPoint: numeric zeta matrix is singular "
                                  "within precision");
        std::swap(a[k], a[pivot]);
        for (int i = k + 1; i < m; ++i) {
            BigFloat f = a[i][k] / a[k][k];
            for (int j = k; j <= m; ++j) a[i][j] -= f * a[k][j];
        }
    }
    std::vector<BigFloat> x(m);
    BigFloat total(0);
    for (int i = m - 1; i >= 0; --i) {
        BigFloat acc = a[i][m];
        for (int j = i + 1; j < m; ++j) acc -= a[i][j] * x[j];
        x[i] = acc / a[i][i];
        total += x[i];
    }
    return total;
}

MagnitudeEval magnitude_function_eval(const FiniteMetricSpace& space, const Rat& t, int digits) {
    if (t <= 0) throw ValidationError("magnitude function requires t > 0");
    if (digits < 1) throw ValidationError("precision must be at least 1 digit");
    RationalFunctionQ f = magnitude_rational(space);

    const unsigned prec = static_cast<unsigned>(digits) * 2 + 30;
    BigFloat::default_precision(prec);

    BigFloat tf{t.get_mpq_t()};
    BigFloat u = exp(-tf / f.exponent_denominator()); // u = q^(1/N) = e^(-t/N)
    BigFloat den_val = eval_poly(f.den(), u);

    BigFloat tiny = pow(BigFloat(10), -(digits + 5));
    if (BigFloat(abs(den_val)) < tiny)
        throw ValidationError("PoleAtEvaluationPoint: denominator vanishes within precision at "
                              "t = " + to_string(t));
    BigFloat value = eval_poly(f.num(), u) / den_val;

    BigFloat numeric = numeric_zeta_inverse_sum(space, tf, tiny);
    BigFloat scale = 1;
    BigFloat av = abs(value), an = abs(numeric);
    if (av > scale) scale = av;
    if (an > scale) scale = an;
    if (BigFloat(abs(value - numeric)) > pow(BigFloat(10), -digits) * scale)
        throw InternalCheckError("magnitude evaluation paths disagree at t = " + to_string(t) +
                                 ": " + value.str(digits + 2) + " vs " + numeric.str(digits + 2));

    MagnitudeEval out;
    std::ostringstream os;
    os << std::fixed << std::setprecision(digits) << value;
    out.decimal = os.str();
    out.approx = static_cast<double>(value);
    return out;
}

GradedSeries magnitude_series(const FiniteMetricSpace& space, const Rat& l_max) {
    if (!space.flags().separated)
        throw ValidationError("NotSeparated: magnitude series requires a separated space");
    const int m = space.size();

    std::map<Rat, Int> coeff;
    coeff[Rat(0)] = m; // the m degree-0 singletons
    if (l_max < 0) return {{}, l_max};

    // DFS over nondegenerate tuples with length <= l_max; sign alternates with
    // degree. Degrees are bounded by l_max / delta, so this terminates.
    auto dfs = [&](auto&& self, int last, const Rat& len, int degree) -> void {
        for (int j = 0; j < m; ++j) {
            if (j == last) continue;
            const ExtRat& step = space.dist(last, j);
            if (step.is_inf()) continue;
            Rat next = len + step.value;
            if (next > l_max) continue;
            coeff[next] += (degree + 1) % 2 == 0 ? 1 : -1;
            self(self, j, next, degree + 1);
        }
    };
    for (int i = 0; i < m; ++i) dfs(dfs, i, Rat(0), 0);

    GradedSeries s;
    s.l_max = l_max;
    for (auto& [g, c] : coeff)
        if (c != 0) s.terms.emplace_back(g, c);
    return s;
}

std::vector<std::pair<Rat, Rat>> expand_power_series(const RationalFunctionQ& f, const Rat& l_max) {
    const int n = f.exponent_denominator();
    Rat e_max_rat = l_max * n;
    Int e_max_int = e_max_rat.get_num() / e_max_rat.get_den(); // floor for non-negative l_max
    if (l_max < 0) return {};
    if (!e_max_int.fits_sint_p())
        throw ResourceBoundError("series expansion length", 0, INT32_MAX);
    const int e_max = static_cast<int>(e_max_int.get_si());

    Rat d0(f.den().coeff(0));
    if (d0 == 0)
        throw ValidationError("DenominatorConstantTermZero: cannot expand at q = 0");

    // Ascending long division: remainder r starts as the numerator; each step
    // peels off the coefficient of u^e.
    std::vector<Rat> rem(e_max + 1, Rat(0));
    for (int e = 0; e <= e_max; ++e) rem[e] = Rat(f.num().coeff(e));
    std::vector<std::pair<Rat, Rat>> out;
    for (int e = 0; e <= e_max; ++e) {
        Rat c = rem[e] / d0;
        out.emplace_back(Rat(e) / n, c);
        if (c == 0) continue;
        for (int j = 0; e + j <= e_max; ++j) {
            Int dj = f.den().coeff(j);
            if (dj != 0) rem[e + j] -= c * Rat(dj);
        }
    }
    return out;
}

SeriesMatch series_matches_rational(const GradedSeries& series, const RationalFunctionQ& f,
                                    const Rat& l_max) {
    auto expansion = expand_power_series(f, l_max);
    std::map<Rat, Rat> by_grade;
    for (auto& [g, c] : expansion) by_grade[g] = c;

    // Merge grade sets: series grades must be expansion grades (multiples of 1/N)
    // for the same space; any stray grade is a mismatch by definition.
    std::map<Rat, std::pair<Rat, Rat>> merged; // grade -> (series, expansion)
    for (const auto& [g, c] : series.terms)
        if (g <= l_max) merged[g].first = Rat(c);
    for (auto& [g, c] : by_grade) merged[g].second = c;

    for (auto& [g, vals] : merged) {
        if (vals.first != vals.second)
            return {false, g, vals.first, vals.second};
    }
    return {};
}

} // namespace magni
