#pragma once

#include <string>
#include <vector>

#include "magni/rational.hpp"

namespace magni {

// Dense integer polynomial in one formal variable, coefficients ascending.
// Invariant: no trailing zero coefficients (the zero polynomial is empty).
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { trim(); }
    static IntPoly constant(Int v);
    static IntPoly monomial(Int coeff, int exp);

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; } // -1 for zero
    const Int& leading() const;
    const std::vector<Int>& coeffs() const { return c_; }
    Int coeff(int e) const { return e >= 0 && e < static_cast<int>(c_.size()) ? c_[e] : Int(0); }

    friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator-(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator-(const IntPoly& a);
    friend IntPoly operator*(const IntPoly& a, const Int& s);
    friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const IntPoly& a, const IntPoly& b) { return !(a == b); }

    // GCD of all coefficients, non-negative; 0 for the zero polynomial.
    Int content() const;
    IntPoly primitive_part() const;

    // Exact division; throws InternalCheckError if b does not divide a.
    static IntPoly div_exact(const IntPoly& a, const IntPoly& b);

    // Substitute variable^k, i.e. coefficient at e moves to e*k.
    IntPoly stretch(int k) const;

    // Exact rational evaluation (Horner).
    Rat eval(const Rat& x) const;

    // Sparse term list "c0 + c1*u^e1 + ..." ascending; "0" for zero.
    std::string to_string(const std::string& var = "u") const;

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<Int> c_;
};

// Primitive gcd with positive leading coefficient (primitive PRS); gcd(0,0) = 0.
IntPoly poly_gcd(IntPoly a, IntPoly b);

} // namespace magni
