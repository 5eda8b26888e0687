#pragma once

#include <gmpxx.h>

#include <cctype>
#include <string>
#include <string_view>

#include "kempf/error.hpp"

namespace kempf {

using Rational = mpq_class;

inline int sign(const Rational& x) { return sgn(x); }

/// Parses "p", "-p", "p/q" with integer p, q (q != 0). Whitespace is not allowed.
inline Rational parse_rational(std::string_view text) {
    auto is_integer = [](std::string_view s) {
        if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
        if (s.empty()) return false;
        for (char c : s)
            if (!std::isdigit(static_cast<unsigned char>(c))) return false;
        return true;
    };
    const auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
    if (!is_integer(num) || !is_integer(den) || den.front() == '-' || den.front() == '+')
        throw Error(ErrorCode::parse_error, "not a rational number: '" + std::string(text) + "'");
    auto strip_plus = [](std::string_view s) { return s.front() == '+' ? s.substr(1) : s; };
    mpz_class n(std::string(strip_plus(num)), 10);
    mpz_class d(std::string(den), 10);
    if (d == 0) throw Error(ErrorCode::parse_error, "zero denominator in '" + std::string(text) + "'");
    Rational q(n, d);
    q.canonicalize();
    return q;
}

inline std::string to_string(const Rational& x) { return x.get_str(); }

inline double to_double(const Rational& x) { return x.get_d(); }

} // namespace kempf
