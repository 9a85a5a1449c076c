#include "magni/rational_function.hpp"

#include <numeric>

#include "magni/errors.hpp"

namespace magni {

RationalFunctionQ::RationalFunctionQ(int exponent_denominator, IntPoly num, IntPoly den)
    : n_(exponent_denominator), num_(std::move(num)), den_(std::move(den)) {
    if (n_ <= 0) throw ValidationError("exponent denominator must be positive");
    if (den_.is_zero()) throw ValidationError("zero denominator in rational function");
    normalize();
}

void RationalFunctionQ::normalize() {
    if (num_.is_zero()) {
        den_ = IntPoly::constant(1);
        n_ = 1;
        return;
    }
    IntPoly g = poly_gcd(num_, den_);
    if (g.degree() > 0 || g.leading() != 1) {
        num_ = IntPoly::div_exact(num_, g);
        den_ = IntPoly::div_exact(den_, g);
    }
    if (den_.leading() < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    // Reduce N by the gcd of N and all used exponents, so u = q^(1/N) is minimal.
    if (n_ > 1) {
        int g_exp = n_;
        auto fold = [&](const IntPoly& p) {
            const auto& c = p.coeffs();
            for (size_t e = 0; e < c.size() && g_exp > 1; ++e)
                if (c[e] != 0) g_exp = std::gcd(g_exp, static_cast<int>(e));
        };
        fold(num_);
        fold(den_);
        if (g_exp > 1) {
            auto shrink = [&](const IntPoly& p) {
                std::vector<Int> r(p.degree() / g_exp + 1, Int(0));
                const auto& c = p.coeffs();
                for (size_t e = 0; e < c.size(); ++e)
                    if (c[e] != 0) r[e / g_exp] = c[e];
                return IntPoly(std::move(r));
            };
            num_ = shrink(num_);
            den_ = shrink(den_);
            n_ /= g_exp;
        }
    }
}

std::pair<RationalFunctionQ, RationalFunctionQ>
RationalFunctionQ::to_common_n(const RationalFunctionQ& a, const RationalFunctionQ& b) {
    int l = std::lcm(a.n_, b.n_);
    RationalFunctionQ ra = a, rb = b;
    if (l != a.n_) {
        ra.num_ = a.num_.stretch(l / a.n_);
        ra.den_ = a.den_.stretch(l / a.n_);
        ra.n_ = l;
    }
    if (l != b.n_) {
        rb.num_ = b.num_.stretch(l / b.n_);
        rb.den_ = b.den_.stretch(l / b.n_);
        rb.n_ = l;
    }
    return {std::move(ra), std::move(rb)};
}

bool operator==(const RationalFunctionQ& a, const RationalFunctionQ& b) {
    auto [x, y] = RationalFunctionQ::to_common_n(a, b);
    // Both sides are canonical up to content; cross-multiply to be safe.
    return x.num_ * y.den_ == y.num_ * x.den_;
}

RationalFunctionQ operator+(const RationalFunctionQ& a, const RationalFunctionQ& b) {
    auto [x, y] = RationalFunctionQ::to_common_n(a, b);
    return RationalFunctionQ(x.n_, x.num_ * y.den_ + y.num_ * x.den_, x.den_ * y.den_);
}

RationalFunctionQ operator-(const RationalFunctionQ& a, const RationalFunctionQ& b) {
    auto [x, y] = RationalFunctionQ::to_common_n(a, b);
    return RationalFunctionQ(x.n_, x.num_ * y.den_ - y.num_ * x.den_, x.den_ * y.den_);
}

RationalFunctionQ operator*(const RationalFunctionQ& a, const RationalFunctionQ& b) {
    auto [x, y] = RationalFunctionQ::to_common_n(a, b);
    return RationalFunctionQ(x.n_, x.num_ * y.num_, x.den_ * y.den_);
}

RationalFunctionQ operator/(const RationalFunctionQ& a, const RationalFunctionQ& b) {
    if (b.is_zero()) throw ValidationError("division by zero rational function");
    auto [x, y] = RationalFunctionQ::to_common_n(a, b);
    return RationalFunctionQ(x.n_, x.num_ * y.den_, x.den_ * y.num_);
}

RationalFunctionQ operator-(const RationalFunctionQ& a) {
    return RationalFunctionQ(a.n_, -a.num_, a.den_);
}

RationalFunctionQ RationalFunctionQ::with_exponents_scaled(const Rat& t) const {
    if (t <= 0) throw ValidationError("exponent scale must be positive");
    // q ↦ q^(p/s): exponent e/N becomes e*p/(N*s).
    Int p = t.get_num(), s = t.get_den();
    if (!p.fits_sint_p() || !s.fits_sint_p())
        throw ValidationError("exponent scale too large");
    int pi = static_cast<int>(p.get_si()), si = static_cast<int>(s.get_si());
    return RationalFunctionQ(n_ * si, num_.stretch(pi), den_.stretch(pi));
}

Rat RationalFunctionQ::eval_at_q(const Rat& q) const {
    if (n_ != 1)
        throw ValidationError("exact evaluation requires integer exponents (N = 1), got N = " +
                              std::to_string(n_));
    Rat d = den_.eval(q);
    if (d == 0) throw ValidationError("PoleAtEvaluationPoint: denominator vanishes at q = " +
                                      magni::to_string(q));
    return num_.eval(q) / d;
}

std::string RationalFunctionQ::to_string() const {
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ") in q^(1/" + std::to_string(n_) +
           ")";
}

} // namespace magni
