#pragma once

/**
 * @file families.hpp
 * @brief Closed-form and elliptic-curve constructions of progressions.
 *
 * Four constructions are implemented:
 *
 *   - family_both_axis: a one-parameter closed form whose progressions
 *     start at (h-a, 0) and end at (h+a, 0).
 *   - one-axis pipeline (ratio parametrized, curve data for r = 5/3):
 *     progressions ending at (h+a, 0) from points of a quartic model;
 *     for r = 5/3 a Weierstrass model and rank-2 generator set feed it.
 *   - symmetric pipeline: progressions whose outer points straddle the
 *     vertical diameter symmetrically, from a rank-1 curve.
 *   - general pipeline: progressions avoiding the x-axis points
 *     entirely, from a rank-3 curve.
 *
 * Each pipeline transfers curve points through an explicit birational
 * map, assembles the witness exactly, verifies and normalizes it.
 * Points on a map's excluded locus raise ExcludedLocus.
 */

#include <optional>
#include <stdexcept>
#include <vector>

#include "gpcircle/circle.hpp"
#include "gpcircle/elliptic.hpp"
#include "gpcircle/rational.hpp"
#include "gpcircle/search.hpp"

namespace gpc {

/// A rational map is undefined where its denominator vanishes.
struct ExcludedLocus : std::domain_error {
    explicit ExcludedLocus(const std::string& denominator_name)
        : std::domain_error("excluded locus: " + denominator_name + " = 0"),
          denominator(denominator_name) {}
    std::string denominator;
};

/// Curve Y^2 = c4 X^4 + c3 X^3 + c2 X^2 + c1 X + c0.
struct QuarticCurve {
    Rat c4, c3, c2, c1, c0;

    Rat value_at(const Rat& X) const { return (((c4 * X + c3) * X + c2) * X + c1) * X + c0; }
};

struct QuarticPoint {
    Rat X, Y;

    friend bool operator==(const QuarticPoint& lhs, const QuarticPoint& rhs) {
        return lhs.X == rhs.X && lhs.Y == rhs.Y;
    }
};

inline bool on_quartic(const QuarticCurve& c, const QuarticPoint& p) {
    return p.Y * p.Y == c.value_at(p.X);
}

// ---------------------------------------------------------------------
// Hardcoded curves and generators.  Ranks and generators come from the
// published tables; the library validates on-curve membership only.
// ---------------------------------------------------------------------

/// y^2 = x^3 - 14700x + 286000 (rank 2), feeding the one-axis pipeline
/// at ratio 5/3.
inline const WeierstrassCurve& one_axis_curve() {
    static const WeierstrassCurve c{Rat(0), Rat(-14700), Rat(286000)};
    return c;
}

inline const std::vector<CurvePoint>& one_axis_generators() {
    static const std::vector<CurvePoint> gens = [] {
        std::vector<CurvePoint> g{CurvePoint(Rat(-40), Rat(900)), CurvePoint(Rat(14), Rat(288))};
        for (const auto& p : g)
            if (!on_curve(one_axis_curve(), p)) throw std::logic_error("one-axis generator off curve");
        return g;
    }();
    return gens;
}

/// y^2 = x^3 - 1227x + 16346 (rank 1), feeding the symmetric pipeline.
inline const WeierstrassCurve& symmetric_curve() {
    static const WeierstrassCurve c{Rat(0), Rat(-1227), Rat(16346)};
    return c;
}

inline const std::vector<CurvePoint>& symmetric_generators() {
    static const std::vector<CurvePoint> gens = [] {
        std::vector<CurvePoint> g{CurvePoint(Rat(25), Rat(36))};
        if (!on_curve(symmetric_curve(), g[0])) throw std::logic_error("symmetric generator off curve");
        return g;
    }();
    return gens;
}

/// y^2 = x^3 + x^2 - 7758767360x + 237867647099508 (rank 3), feeding
/// the general pipeline.
inline const WeierstrassCurve& general_curve() {
    static const WeierstrassCurve c{Rat(1), Rat(-7758767360), Rat(Int("237867647099508"))};
    return c;
}

inline const std::vector<CurvePoint>& general_generators() {
    static const std::vector<CurvePoint> gens = [] {
        std::vector<CurvePoint> g{
            CurvePoint(make_rat(32760151, 441), make_rat(Int("78279537050"), 9261)),
            CurvePoint(Rat(64588), Rat(2486862)),
            CurvePoint(Rat(5836), Rat(13884750)),
        };
        for (const auto& p : g)
            if (!on_curve(general_curve(), p)) throw std::logic_error("general generator off curve");
        return g;
    }();
    return gens;
}

/// Quartic model of the symmetric pipeline: Y^2 = 4X^4 + 2X^3 - 27X^2 - 4X + 61.
inline const QuarticCurve& symmetric_quartic() {
    static const QuarticCurve c{Rat(4), Rat(2), Rat(-27), Rat(-4), Rat(61)};
    return c;
}

/// Quartic model of the general pipeline:
/// v^2 = 1329489u^4 - 6745260u^3 + 11011078u^2 - 6745260u + 1329489.
inline const QuarticCurve& general_quartic() {
    static const QuarticCurve c{Rat(1329489), Rat(-6745260), Rat(11011078), Rat(-6745260),
                                Rat(1329489)};
    return c;
}

/// Quartic model of the one-axis pipeline at ratio r (r > 0, r != 1).
inline QuarticCurve quartic_one_axis(const Rat& r) {
    if (r <= 0 || r == 1) throw std::invalid_argument("quartic_one_axis: requires r > 0, r != 1");
    Rat rp1 = r + 1;
    Rat rp1sq = rp1 * rp1;
    return {-rp1sq,
            -4 * r * r * rp1sq,
            2 * r * rp1 * (2 * r * r * r + 6 * r * r + 3 * r + 1),
            -4 * r * r * r * rp1sq,
            -r * r * rp1sq};
}

// ---------------------------------------------------------------------
// Birational transfers between the Weierstrass and quartic models.
// ---------------------------------------------------------------------

/// one-axis (r = 5/3): Weierstrass -> quartic.  Excluded: 4x - y - 980 = 0.
inline QuarticPoint weier_to_quartic_r53(const Rat& x, const Rat& y) {
    Rat den = 4 * x - y - 980;
    if (den == 0) throw ExcludedLocus("4x - y - 980");
    Rat X = -3 * (10 * x + y - 700) / (2 * den);
    Rat Y = 98 * (x * x * x - 360 * x * x + 14700 * x - 1000 * y + 1192000) / (9 * den * den);
    return {std::move(X), std::move(Y)};
}

/// one-axis (r = 5/3): quartic -> Weierstrass.  Excluded: 2X - 3 = 0.
inline std::pair<Rat, Rat> quartic_to_weier_r53(const Rat& X, const Rat& Y) {
    Rat den = 2 * X - 3;
    if (den == 0) throw ExcludedLocus("2X - 3");
    Rat den2 = den * den;
    Rat x = -(208 * X * X - 960 * X - 81 * Y + 90) / den2;
    Rat y = -18 * (528 * X * X * X - 920 * X * X - 36 * X * Y - 1980 * X - 135 * Y + 1200) /
            (den2 * den);
    return {std::move(x), std::move(y)};
}

/// symmetric: Weierstrass -> quartic.  Excluded: 4x - 73 = 0.
inline QuarticPoint weier_to_quartic_sym(const Rat& x, const Rat& y) {
    Rat den = 4 * x - 73;
    if (den == 0) throw ExcludedLocus("4x - 73");
    Rat X = -(x - 2 * y - 7) / (2 * den);
    Rat Y = (8 * x * x * x - 219 * x * x - 4 * y * y + 45 * y + 24187) / (2 * den * den);
    return {std::move(X), std::move(Y)};
}

/// symmetric: quartic -> Weierstrass (polynomial; no excluded locus).
inline std::pair<Rat, Rat> quartic_to_weier_sym(const Rat& X, const Rat& Y) {
    Rat x = 8 * X * X + 2 * X + 4 * Y - 9;
    Rat y = 32 * X * X * X + 12 * X * X + 16 * X * Y - 108 * X + 2 * Y - 8;
    return {std::move(x), std::move(y)};
}

/// general: Weierstrass -> quartic.  Excluded: 252y + 10671x + 1337348919 = 0.
inline QuarticPoint weier_to_quartic_gen(const Rat& x, const Rat& y) {
    Rat den = 252 * y + 10671 * x + 1337348919;
    if (den == 0) throw ExcludedLocus("252y + 10671x + 1337348919");
    Rat u1 = (68677 * x - 2616678847 + 294 * y) / den;
    Rat vden = 84 * y + 3557 * x + 445782973;  // den / 3
    Rat v = (3148740 * x * x * x - Rat(Int("701722434420")) * x * x +
             Rat(Int("24429873322170120")) * x - Rat(Int("53230085194000")) * y +
             Rat(Int("316866956396335870560"))) /
            (vden * vden);
    return {std::move(u1), std::move(v)};
}

/// general: quartic -> Weierstrass.  Excluded: 6u - 7 = 0.
inline std::pair<Rat, Rat> quartic_to_weier_gen(const Rat& u1, const Rat& v) {
    Rat den = 6 * u1 - 7;
    if (den == 0) throw ExcludedLocus("6u - 7");
    Rat den2 = den * den;
    Rat x = -(10439127 * u1 * u1 - 21636858 * u1 - 16065 * v + 3865183) / (8 * den2);
    Rat y = -765 *
            (17040807 * u1 * u1 * u1 + 49967001 * u1 * u1 + 10671 * u1 * v - 171887163 * u1 -
             68677 * v + 80372691) /
            (16 * den2 * den);
    return {std::move(x), std::move(y)};
}

// ---------------------------------------------------------------------
// The constructions.
// ---------------------------------------------------------------------

/**
 * Closed-form family with both x-axis points in the progression.  The
 * parameter t must avoid {0, 1, -1} and the degenerate ratio 1; the raw
 * ratio is (t^2-1)^2 / (4t^2) and normalization inverts it when < 1.
 */
inline CanonicalWitness family_both_axis(const Rat& t) {
    if (t == 0 || t == 1 || t == -1)
        throw std::invalid_argument("family_both_axis: t must avoid {0, 1, -1}");
    Rat t2 = t * t;
    Rat r = (t2 - 1) * (t2 - 1) / (4 * t2);
    if (r == 1) throw std::invalid_argument("family_both_axis: ratio degenerates to 1");
    Rat t4 = t2 * t2, t6 = t4 * t2, t8 = t4 * t4, t10 = t8 * t2, t12 = t8 * t4;
    Rat h = (t8 - 8 * t6 + 30 * t4 - 8 * t2 + 1) * (t2 + 1) * (t2 + 1);
    Rat a = t12 - 6 * t10 + 15 * t8 - 84 * t6 + 15 * t4 - 6 * t2 + 1;
    Rat tm1 = t - 1, tp1 = t + 1;
    Rat tm2 = tm1 * tm1, tp2 = tp1 * tp1;
    CirclePoint P1{128 * t6, Rat(0)};
    CirclePoint P2{32 * tm2 * tp2 * t4, 8 * t2 * (t8 - 6 * t6 + 6 * t2 - 1)};
    CirclePoint P3{8 * tm2 * tm2 * tp2 * tp2 * t2,
                   4 * t * (t10 - 7 * t8 + 6 * t6 + 6 * t4 - 7 * t2 + 1)};
    CirclePoint P4{2 * tm2 * tm2 * tm2 * tp2 * tp2 * tp2, Rat(0)};
    return normalize_witness({{std::move(h), std::move(a)}, {P1, P2, P3, P4}, std::move(r)});
}

/**
 * One-axis pipeline: a point (X, Y) of the quartic model at ratio r
 * becomes a progression ending at (h+a, 0).  Empty when the assembled
 * witness is degenerate; throws ExcludedLocus on X^2 = r or t = 1.
 */
inline std::optional<CanonicalWitness> witness_one_axis(const Rat& r, const Rat& X, const Rat& Y) {
    QuarticCurve quartic = quartic_one_axis(r);
    if (!on_quartic(quartic, {X, Y}))
        throw std::invalid_argument("witness_one_axis: point not on the quartic");
    Rat x2r = X * X - r;
    if (x2r == 0) throw ExcludedLocus("X^2 - r");
    Rat t = Y / ((r + 1) * x2r);
    if (t == 1) throw ExcludedLocus("1 - t");
    Rat u1 = (1 + t) / (1 - t);
    Rat one(1);
    Rat u1sq1 = u1 * u1 + 1;
    Rat r3m1 = r * r * r - 1;
    Rat h = (u1 * u1 - 2 * r * r * r * u1 + 1) / (u1sq1 * r3m1);
    Rat x1 = h + 2 * u1 / u1sq1;
    Rat y1 = (u1 * u1 - 1) / u1sq1;
    Rat x2 = r * (u1 - 1) * (u1 - 1) / (u1sq1 * r3m1);
    Rat x3 = x2 * r;
    Rat p = r * (X * X * r + X * X - 2 * X * r + r * r + r) / x2r;
    Rat q = -r * (X * X - 2 * X * r - 2 * X + r) / x2r;
    Rat v = 2 * p / (t - 1);
    Rat w = 2 * q / (t - 1);
    // the two on-circle conditions for P2 and P3, checked exactly
    Rat u1p1sq = (u1 + 1) * (u1 + 1);
    Rat cond2 = u1p1sq * r * r * r * r + 2 * u1p1sq * r * r * r +
                (3 * u1 * u1 + 2 * u1 + 3) * r * r + (2 * u1 * u1 + 2) * r;
    Rat cond3 = u1p1sq * r * r + (2 * u1 * u1 + 2) * r + 2 * u1 * u1 + 2;
    if (cond2 != v * v || cond3 != w * w)
        throw std::logic_error("witness_one_axis: on-circle conditions failed");
    Rat denom = (r * r + r + 1) * u1sq1;
    Rat y2 = v * (u1 - 1) / denom;
    Rat y3 = w * (u1 - 1) * r / denom;
    GPWitness witness{{h, one},
                      {CirclePoint{std::move(x1), std::move(y1)}, CirclePoint{std::move(x2), std::move(y2)},
                       CirclePoint{std::move(x3), std::move(y3)}, CirclePoint{h + 1, Rat(0)}},
                      r};
    if (!verify_witness(witness)) return std::nullopt;
    return normalize_witness(witness);
}

/**
 * Symmetric pipeline: a point (X, Y) of the symmetric quartic gives a
 * progression with P1, P4 mirror images across the vertical diameter
 * (parameter u = 3, where the on-circle discriminants vanish).  Empty
 * when the derived ratio is <= 0 or 1; throws ExcludedLocus at 2X+1 = 0.
 */
inline std::optional<CanonicalWitness> witness_symmetric(const Rat& X, const Rat& Y) {
    if (!on_quartic(symmetric_quartic(), {X, Y}))
        throw std::invalid_argument("witness_symmetric: point not on the quartic");
    Rat twoXp1 = 2 * X + 1;
    if (twoXp1 == 0) throw ExcludedLocus("2X + 1");
    Rat r = (X * X - 4) / twoXp1;
    if (r <= 0 || r == 1) return std::nullopt;
    const Rat u(3);
    Rat one(1);
    Rat usq1 = u * u + 1;  // 10
    Rat r3 = r * r * r;
    Rat h = 2 * u * (r3 + 1) / (usq1 * (r3 - 1));
    Rat halfchord = 2 * u / usq1;  // 3/5
    Rat x1 = h - halfchord;
    Rat x4 = h + halfchord;
    Rat x2 = x1 * r;
    Rat x3 = x1 * r * r;
    Rat z2 = 4 * (2 * X * X + 2 * X - 7) * (X * X + X + 4) / (twoXp1 * twoXp1);
    Rat z3 = 4 * (X * X + 4 * X - 2) * Y / (twoXp1 * twoXp1);
    if (16 * (r * r + r + 4) * (2 * r + 1) * (2 * r + 1) != z2 * z2 ||
        16 * (4 * r * r + r + 1) * (r + 2) * (r + 2) != z3 * z3)
        throw std::logic_error("witness_symmetric: on-circle conditions failed");
    Rat denom = (r * r + r + 1) * usq1;
    Rat y2 = z2 / denom;
    Rat y3 = z3 / denom;
    Circle circle{h, one};
    auto y1 = lift_abscissa(circle, x1);
    auto y4 = lift_abscissa(circle, x4);
    if (!y1 || !y4) return std::nullopt;
    GPWitness witness{circle,
                      {CirclePoint{std::move(x1), std::move(*y1)}, CirclePoint{std::move(x2), std::move(y2)},
                       CirclePoint{std::move(x3), std::move(y3)}, CirclePoint{std::move(x4), std::move(*y4)}},
                      std::move(r)};
    if (!verify_witness(witness)) return std::nullopt;
    return normalize_witness(witness);
}

/**
 * General pipeline (u2 = 3/5, u3 = 1/3 branch): a point (u1, v) of the
 * general quartic gives a progression containing neither x-axis point.
 * Empty when the derived ratio is <= 0 or 1; throws ExcludedLocus when
 * 15u^2 - 34u + 15 = 0.
 */
inline std::optional<CanonicalWitness> witness_general(const Rat& u1, const Rat& v) {
    if (!on_quartic(general_quartic(), {u1, v}))
        throw std::invalid_argument("witness_general: point not on the quartic");
    Rat den = 5 * (15 * u1 * u1 - 34 * u1 + 15);
    if (den == 0) throw ExcludedLocus("15u^2 - 34u + 15");
    Rat r = -24 * (u1 * u1 + 1) / den;
    if (r <= 0 || r == 1) return std::nullopt;
    // quadratic for u4; its discriminant is 64 v^2, so the roots are rational
    Rat lead = 4401 * u1 * u1 - 8670 * u1 + 4401;
    QuadraticQ quad{lead, -(12750 * u1 * u1 - 28900 * u1 + 12750), lead};
    auto roots = solve_quadratic(quad);
    if (roots.empty()) return std::nullopt;
    const Rat u2 = make_rat(3, 5), u3 = make_rat(1, 3);
    return detail::assemble_witness(r, u1, u2, u3, roots.front());
}

/**
 * All quartic points (X, Y) with X = n/d, |n| <= height_bound,
 * 1 <= d <= height_bound, gcd(|n|, d) = 1, found by direct enumeration
 * of X and an exact square test; both signs of a nonzero Y are
 * reported.  Deterministic order: ascending d, then ascending n, +Y
 * before -Y.
 */
inline std::vector<QuarticPoint> quartic_point_search(const QuarticCurve& c,
                                                      std::int64_t height_bound) {
    if (height_bound < 1) throw std::invalid_argument("quartic_point_search: bound must be >= 1");
    std::vector<QuarticPoint> out;
    for (std::int64_t d = 1; d <= height_bound; ++d) {
        for (std::int64_t n = -height_bound; n <= height_bound; ++n) {
            if (std::gcd(n < 0 ? -n : n, d) != 1) continue;
            Rat X = make_rat(n, d);
            auto y = rat_sqrt(c.value_at(X));
            if (!y) continue;
            bool nonzero = *y != 0;
            out.push_back({X, std::move(*y)});
            if (nonzero) out.push_back({X, -out.back().Y});
        }
    }
    return out;
}

}  // namespace gpc
