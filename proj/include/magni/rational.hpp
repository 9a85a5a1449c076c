#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

#include "magni/errors.hpp"

namespace magni {

using Rat = mpq_class;
using Int = mpz_class;

inline Rat make_rat(long num, long den = 1) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

// Non-negative rational extended with an infinity sentinel. Addition absorbs
// infinity and infinity dominates every finite value in comparisons.
struct ExtRat {
    Rat value;
    bool infinite = false;

    ExtRat() : value(0) {}
    ExtRat(Rat v) : value(std::move(v)) {}
    ExtRat(long v) : value(v) {}
    static ExtRat inf() {
        ExtRat r;
        r.infinite = true;
        return r;
    }
    bool is_inf() const { return infinite; }
    const Rat& finite() const {
        if (infinite) throw InternalCheckError("finite() called on infinite value");
        return value;
    }

    friend ExtRat operator+(const ExtRat& a, const ExtRat& b) {
        if (a.infinite || b.infinite) return inf();
        return ExtRat(a.value + b.value);
    }
    friend ExtRat operator*(const ExtRat& a, const Rat& t) {
        if (a.infinite) return inf();
        return ExtRat(a.value * t);
    }
    friend bool operator==(const ExtRat& a, const ExtRat& b) {
        if (a.infinite || b.infinite) return a.infinite == b.infinite;
        return a.value == b.value;
    }
    friend bool operator!=(const ExtRat& a, const ExtRat& b) { return !(a == b); }
    friend bool operator<(const ExtRat& a, const ExtRat& b) {
        if (a.infinite) return false;
        if (b.infinite) return true;
        return a.value < b.value;
    }
    friend bool operator<=(const ExtRat& a, const ExtRat& b) { return a < b || a == b; }
    friend bool operator>(const ExtRat& a, const ExtRat& b) { return b < a; }
    friend bool operator>=(const ExtRat& a, const ExtRat& b) { return b <= a; }
};

// Canonical text form: "p", "p/q", or "inf".
std::string to_string(const ExtRat& r);
std::string to_string(const Rat& r);

// Parses an integer, a fraction "p/q", or "inf". Returns nullopt on malformed input.
std::optional<ExtRat> parse_ext_rat(const std::string& token);
std::optional<Rat> parse_rat(const std::string& token);

} // namespace magni
