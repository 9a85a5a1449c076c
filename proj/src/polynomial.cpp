#include "magni/polynomial.hpp"

#include <algorithm>

#include "magni/errors.hpp"

namespace magni {

IntPoly IntPoly::constant(Int v) {
    return IntPoly(std::vector<Int>{std::move(v)});
}

IntPoly IntPoly::monomial(Int coeff, int exp) {
    if (coeff == 0) return IntPoly();
    std::vector<Int> c(exp + 1, Int(0));
    c[exp] = std::move(coeff);
    return IntPoly(std::move(c));
}

const Int& IntPoly::leading() const {
    if (c_.empty()) throw InternalCheckError("leading() of zero polynomial");
    return c_.back();
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
    std::vector<Int> r(std::max(a.c_.size(), b.c_.size()), Int(0));
    for (size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
    return IntPoly(std::move(r));
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) {
    std::vector<Int> r(std::max(a.c_.size(), b.c_.size()), Int(0));
    for (size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) r[i] -= b.c_[i];
    return IntPoly(std::move(r));
}

IntPoly operator-(const IntPoly& a) {
    std::vector<Int> r = a.c_;
    for (auto& x : r) x = -x;
    return IntPoly(std::move(r));
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return IntPoly();
    std::vector<Int> r(a.c_.size() + b.c_.size() - 1, Int(0));
    for (size_t i = 0; i < a.c_.size(); ++i)
        for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    return IntPoly(std::move(r));
}

IntPoly operator*(const IntPoly& a, const Int& s) {
    if (s == 0) return IntPoly();
    std::vector<Int> r = a.c_;
    for (auto& x : r) x *= s;
    return IntPoly(std::move(r));
}

Int IntPoly::content() const {
    Int g = 0;
    for (const auto& x : c_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

IntPoly IntPoly::primitive_part() const {
    if (is_zero()) return IntPoly();
    Int g = content();
    std::vector<Int> r = c_;
    for (auto& x : r) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    return IntPoly(std::move(r));
}

IntPoly IntPoly::div_exact(const IntPoly& a, const IntPoly& b) {
    if (b.is_zero()) throw InternalCheckError("polynomial division by zero");
    if (a.is_zero()) return IntPoly();
    if (a.degree() < b.degree()) throw InternalCheckError("inexact polynomial division");
    std::vector<Int> rem = a.c_;
    std::vector<Int> quot(a.degree() - b.degree() + 1, Int(0));
    for (int k = a.degree() - b.degree(); k >= 0; --k) {
        Int& lead = rem[k + b.degree()];
        if (lead == 0) continue;
        Int q;
        mpz_tdiv_qr(q.get_mpz_t(), lead.get_mpz_t(), lead.get_mpz_t(), b.leading().get_mpz_t());
        if (lead != 0) throw InternalCheckError("inexact polynomial division");
        quot[k] = q;
        for (int i = 0; i < b.degree(); ++i) rem[k + i] -= q * b.c_[i];
    }
    for (const auto& x : rem)
        if (x != 0) throw InternalCheckError("inexact polynomial division");
    return IntPoly(std::move(quot));
}

IntPoly IntPoly::stretch(int k) const {
    if (is_zero()) return IntPoly();
    std::vector<Int> r(static_cast<size_t>(degree()) * k + 1, Int(0));
    for (size_t i = 0; i < c_.size(); ++i) r[i * k] = c_[i];
    return IntPoly(std::move(r));
}

Rat IntPoly::eval(const Rat& x) const {
    Rat acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + Rat(*it);
    return acc;
}

std::string IntPoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::string out;
    bool first = true;
    for (size_t e = 0; e < c_.size(); ++e) {
        if (c_[e] == 0) continue;
        Int a = c_[e];
        if (first) {
            if (e == 0) out += a.get_str();
            else out += a.get_str() + "*" + var + "^" + std::to_string(e);
            first = false;
        } else {
            std::string sign = a < 0 ? " - " : " + ";
            Int mag = abs(a);
            if (e == 0) out += sign + mag.get_str();
            else out += sign + mag.get_str() + "*" + var + "^" + std::to_string(e);
        }
    }
    return out;
}

// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a mod b.
static IntPoly pseudo_rem(IntPoly a, const IntPoly& b) {
    const Int& lb = b.leading();
    while (!a.is_zero() && a.degree() >= b.degree()) {
        int shift = a.degree() - b.degree();
        IntPoly t = IntPoly::monomial(a.leading(), shift) * b;
        a = a * lb - t;
    }
    return a;
}

IntPoly poly_gcd(IntPoly a, IntPoly b) {
    if (a.is_zero() && b.is_zero()) return IntPoly();
    Int ca = a.content(), cb = b.content();
    Int cg;
    mpz_gcd(cg.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
    a = a.is_zero() ? a : a.primitive_part();
    b = b.is_zero() ? b : b.primitive_part();
    while (!b.is_zero()) {
        IntPoly r = pseudo_rem(a, b);
        a = std::move(b);
        b = r.is_zero() ? IntPoly() : r.primitive_part();
    }
    IntPoly g = a * cg;
    if (!g.is_zero() && g.leading() < 0) g = -g;
    return g;
}

} // namespace magni
