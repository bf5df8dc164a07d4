#pragma once

/**
 * @file rational.hpp
 * @brief Exact integer and rational primitives.
 *
 * Everything in this library is computed over arbitrary-precision
 * rationals; no floating-point value ever decides a result.  The
 * substrate is boost::multiprecision (cpp_int / cpp_rational), which
 * keeps rationals reduced with a positive denominator and represents
 * zero as 0/1.  On top of it this header provides the primitives the
 * rest of the library is built from:
 *
 *   - int_sqrt   exact integer square root (empty unless a perfect square)
 *   - rat_sqrt   exact rational square root (empty unless a rational square)
 *   - solve_quadratic   all rational roots of A s^2 + B s + C = 0
 *
 * Rationals serialize as "numerator/denominator" with the denominator
 * omitted when it is 1.
 */

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace gpc {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// Build n/d with any sign of d (d = 0 throws).
inline Rat make_rat(Int n, Int d) {
    if (d == 0) throw std::domain_error("make_rat: zero denominator");
    if (d < 0) { n = -n; d = -d; }
    return Rat(std::move(n), std::move(d));
}

inline Int rat_num(const Rat& q) { return numerator(q); }
inline Int rat_den(const Rat& q) { return denominator(q); }
inline bool is_integer(const Rat& q) { return denominator(q) == 1; }

inline std::string to_string(const Int& n) { return n.str(); }

inline std::string to_string(const Rat& q) {
    std::string s = numerator(q).str();
    if (denominator(q) != 1) {
        s += '/';
        s += denominator(q).str();
    }
    return s;
}

/// Strict parse of "n" or "n/d" (optional leading '-', decimal digits only).
inline Rat parse_rat(std::string_view text) {
    auto fail = [&] {
        throw std::invalid_argument("parse_rat: malformed rational '" + std::string(text) + "'");
    };
    auto parse_int = [&](std::string_view s, bool allow_sign) -> Int {
        if (s.empty()) fail();
        std::size_t i = 0;
        if (allow_sign && s[0] == '-') i = 1;
        if (i == s.size()) fail();
        for (std::size_t j = i; j < s.size(); ++j)
            if (s[j] < '0' || s[j] > '9') fail();
        return Int(std::string(s));
    };
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rat(parse_int(text, true));
    Int n = parse_int(text.substr(0, slash), true);
    Int d = parse_int(text.substr(slash + 1), false);
    if (d == 0) fail();
    return make_rat(std::move(n), std::move(d));
}

/**
 * Exact integer square root: s with s*s == n, or empty when n is not a
 * perfect square.  Pure integer arithmetic throughout; the floor square
 * root is confirmed by an exact multiplication.
 */
inline std::optional<Int> int_sqrt(const Int& n) {
    if (n < 0) throw std::invalid_argument("int_sqrt: negative input");
    Int s = sqrt(n);  // floor square root, exact integer algorithm
    if (s * s == n) return s;
    return std::nullopt;
}

/**
 * Exact rational square root: the nonnegative s with s*s == q, or empty.
 * A reduced fraction is a rational square iff numerator and denominator
 * are both perfect squares.
 */
inline std::optional<Rat> rat_sqrt(const Rat& q) {
    if (q < 0) return std::nullopt;
    auto sn = int_sqrt(numerator(q));
    if (!sn) return std::nullopt;
    auto sd = int_sqrt(denominator(q));
    if (!sd) return std::nullopt;
    return Rat(std::move(*sn), std::move(*sd));
}

/// Coefficients of A s^2 + B s + C = 0.
struct QuadraticQ {
    Rat A, B, C;
};

/**
 * All rational roots of eq, found via rat_sqrt of the discriminant
 * B^2 - 4AC.  Empty when the discriminant is not a rational square; a
 * zero discriminant yields the repeated root twice.  Roots are returned
 * in ascending order.  A must be nonzero.
 */
inline std::vector<Rat> solve_quadratic(const QuadraticQ& eq) {
    if (eq.A == 0) throw std::invalid_argument("solve_quadratic: leading coefficient is zero");
    Rat disc = eq.B * eq.B - 4 * eq.A * eq.C;
    auto s = rat_sqrt(disc);
    if (!s) return {};
    Rat twoA = 2 * eq.A;
    Rat r1 = (-eq.B - *s) / twoA;
    Rat r2 = (-eq.B + *s) / twoA;
    if (r2 < r1) std::swap(r1, r2);
    return {std::move(r1), std::move(r2)};
}

}  // namespace gpc
