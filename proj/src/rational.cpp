#include "magni/rational.hpp"

#include <cctype>

namespace magni {

std::string to_string(const Rat& r) {
    return r.get_str();
}

std::string to_string(const ExtRat& r) {
    if (r.is_inf()) return "inf";
    return r.value.get_str();
}

static bool valid_rat_token(const std::string& s) {
    if (s.empty()) return false;
    size_t i = 0;
    if (s[i] == '-' || s[i] == '+') ++i;
    size_t digits = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i, ++digits;
    if (digits == 0) return false;
    if (i == s.size()) return true;
    if (s[i] != '/') return false;
    ++i;
    size_t den_digits = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i, ++den_digits;
    return den_digits > 0 && i == s.size();
}

std::optional<Rat> parse_rat(const std::string& token) {
    if (!valid_rat_token(token)) return std::nullopt;
    Rat r;
    if (r.set_str(token, 10) != 0) return std::nullopt;
    if (r.get_den() == 0) return std::nullopt;
    r.canonicalize();
    return r;
}

std::optional<ExtRat> parse_ext_rat(const std::string& token) {
    if (token == "inf") return ExtRat::inf();
    auto r = parse_rat(token);
    if (!r) return std::nullopt;
    return ExtRat(*r);
}

} // namespace magni
