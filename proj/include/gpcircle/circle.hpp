#pragma once

/**
 * @file circle.hpp
 * @brief Circles with rational center and radius, their rational points,
 *        and certified geometric-progression witnesses.
 *
 * A witness is a circle (x-h)^2 + y^2 = a^2 together with four rational
 * points whose abscissae are in geometric progression with common ratio
 * r (> 0, != 1).  verify_witness checks every invariant exactly;
 * normalize_witness maps any verified witness to a canonical form:
 * ratio > 1, positive abscissae, nonnegative ordinates, and all of
 * h, a, x_i, y_i coprime integers with a > 0.
 */

#include <algorithm>
#include <array>
#include <compare>
#include <stdexcept>
#include <utility>

#include "gpcircle/rational.hpp"

namespace gpc {

/// Circle (x-h)^2 + y^2 = a^2.  a is a signed radius parameter; the
/// geometric radius is |a|.  Search code works with a = 1 and lets
/// normalization fix signs at the end.
struct Circle {
    Rat h;
    Rat a;
};

struct CirclePoint {
    Rat x;
    Rat y;

    friend bool operator==(const CirclePoint& lhs, const CirclePoint& rhs) {
        return lhs.x == rhs.x && lhs.y == rhs.y;
    }
};

/// Rational point of the circle at parameter u.
inline CirclePoint point_from_param(const Circle& c, const Rat& u) {
    Rat d = u * u + 1;
    return {c.h + 2 * c.a * u / d, c.a * (u * u - 1) / d};
}

inline bool on_circle(const Circle& c, const CirclePoint& p) {
    Rat dx = p.x - c.h;
    return dx * dx + p.y * p.y == c.a * c.a;
}

/// The ordinate y >= 0 with (x-h)^2 + y^2 = a^2, when it is rational.
inline std::optional<Rat> lift_abscissa(const Circle& c, const Rat& x) {
    Rat dx = x - c.h;
    return rat_sqrt(c.a * c.a - dx * dx);
}

/**
 * Center abscissa forcing the parametrized points at u_i, u_j to have
 * consecutive abscissae with ratio r.  Requires r != 1.
 */
inline Rat h_from_pair(const Rat& a, const Rat& r, const Rat& ui, const Rat& uj) {
    if (r == 1) throw std::invalid_argument("h_from_pair: ratio must not be 1");
    Rat num = -2 * a * (r * ui * uj * uj - ui * ui * uj + r * ui - uj);
    Rat den = (ui * ui + 1) * (uj * uj + 1) * (r - 1);
    return num / den;
}

struct GPWitness {
    Circle circle;
    std::array<CirclePoint, 4> points;
    Rat ratio;
};

/**
 * Exact certification of a witness: nonzero radius, all four points on
 * the circle, nonzero abscissae (a zero abscissa makes the progression
 * degenerate), exact ratio between consecutive abscissae, ratio > 0 and
 * != 1.
 */
inline bool verify_witness(const GPWitness& w) {
    if (w.circle.a == 0) return false;
    if (w.ratio <= 0 || w.ratio == 1) return false;
    for (const auto& p : w.points) {
        if (p.x == 0) return false;
        if (!on_circle(w.circle, p)) return false;
    }
    for (int i = 0; i < 3; ++i)
        if (w.points[i + 1].x != w.ratio * w.points[i].x) return false;
    return true;
}

/// A witness in canonical form (see normalize_witness).  Equality of
/// canonical witnesses is structural and is the library's notion of
/// "same progression".
struct CanonicalWitness {
    Circle circle;
    std::array<CirclePoint, 4> points;
    Rat ratio;

    GPWitness as_witness() const { return {circle, points, ratio}; }

    friend bool operator==(const CanonicalWitness& lhs, const CanonicalWitness& rhs) {
        return lhs.circle.h == rhs.circle.h && lhs.circle.a == rhs.circle.a &&
               lhs.ratio == rhs.ratio && lhs.points == rhs.points;
    }

    friend bool operator<(const CanonicalWitness& lhs, const CanonicalWitness& rhs) {
        if (lhs.circle.h != rhs.circle.h) return lhs.circle.h < rhs.circle.h;
        if (lhs.circle.a != rhs.circle.a) return lhs.circle.a < rhs.circle.a;
        if (lhs.ratio != rhs.ratio) return lhs.ratio < rhs.ratio;
        for (int i = 0; i < 4; ++i) {
            if (lhs.points[i].x != rhs.points[i].x) return lhs.points[i].x < rhs.points[i].x;
            if (lhs.points[i].y != rhs.points[i].y) return lhs.points[i].y < rhs.points[i].y;
        }
        return false;
    }
};

/**
 * Canonicalize a verified witness.  In order: reverse the progression
 * when ratio < 1 (replacing r by 1/r), reflect x -> -x when the
 * abscissae are negative, take |a| and |y_i|, then scale everything by
 * the unique positive rational making h, a, x_i, y_i coprime integers.
 * Each step is an exact symmetry of the witness, so the result verifies
 * whenever the input does.
 */
inline CanonicalWitness normalize_witness(const GPWitness& w) {
    if (!verify_witness(w)) throw std::invalid_argument("normalize_witness: witness does not verify");

    Rat h = w.circle.h;
    Rat a = w.circle.a;
    Rat r = w.ratio;
    std::array<CirclePoint, 4> pts = w.points;

    if (r < 1) {
        std::reverse(pts.begin(), pts.end());
        r = 1 / r;
    }
    if (pts[0].x < 0) {
        for (auto& p : pts) p.x = -p.x;
        h = -h;
    }
    if (a < 0) a = -a;
    for (auto& p : pts)
        if (p.y < 0) p.y = -p.y;

    // Scale factor L/g: L clears denominators, g strips the common factor.
    Int L = 1;
    auto fold_den = [&L](const Rat& v) { L = lcm(L, denominator(v)); };
    fold_den(h);
    fold_den(a);
    for (const auto& p : pts) {
        fold_den(p.x);
        fold_den(p.y);
    }
    Int g = 0;
    auto fold_num = [&](const Rat& v) {
        Rat scaled = v * L;
        g = gcd(g, abs(numerator(scaled)));
    };
    fold_num(h);
    fold_num(a);
    for (const auto& p : pts) {
        fold_num(p.x);
        fold_num(p.y);
    }
    Rat scale = make_rat(std::move(L), std::move(g));

    h *= scale;
    a *= scale;
    for (auto& p : pts) {
        p.x *= scale;
        p.y *= scale;
    }
    return {{std::move(h), std::move(a)}, std::move(pts), std::move(r)};
}

}  // namespace gpc
