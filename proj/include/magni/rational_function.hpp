#pragma once

#include <string>

#include "magni/polynomial.hpp"

namespace magni {

// Ratio of integer polynomials in the formal variable u = q^(1/N). Canonical
// form: numerator and denominator coprime (including contents), denominator
// nonzero with positive leading coefficient, N minimal for the exponents used.
class RationalFunctionQ {
public:
    RationalFunctionQ() : n_(1), num_(), den_(IntPoly::constant(1)) {}
    RationalFunctionQ(int exponent_denominator, IntPoly num, IntPoly den);

    int exponent_denominator() const { return n_; }
    const IntPoly& num() const { return num_; }
    const IntPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    // Equality after rescaling both sides to the lcm of the exponent denominators.
    friend bool operator==(const RationalFunctionQ& a, const RationalFunctionQ& b);
    friend bool operator!=(const RationalFunctionQ& a, const RationalFunctionQ& b) {
        return !(a == b);
    }

    friend RationalFunctionQ operator+(const RationalFunctionQ& a, const RationalFunctionQ& b);
    friend RationalFunctionQ operator-(const RationalFunctionQ& a, const RationalFunctionQ& b);
    friend RationalFunctionQ operator*(const RationalFunctionQ& a, const RationalFunctionQ& b);
    friend RationalFunctionQ operator/(const RationalFunctionQ& a, const RationalFunctionQ& b);
    friend RationalFunctionQ operator-(const RationalFunctionQ& a);

    // q ↦ q^t at the exponent level: every exponent multiplied by the positive rational t.
    RationalFunctionQ with_exponents_scaled(const Rat& t) const;

    // Exact value at a rational point q; requires N = 1 (no fractional exponents).
    Rat eval_at_q(const Rat& q) const;

    // "(<num>)/(<den>) in q^(1/N)" with sparse ascending term lists.
    std::string to_string() const;

private:
    void normalize();
    static std::pair<RationalFunctionQ, RationalFunctionQ> to_common_n(const RationalFunctionQ& a,
                                                                       const RationalFunctionQ& b);

    int n_;
    IntPoly num_, den_;
};

} // namespace magni
