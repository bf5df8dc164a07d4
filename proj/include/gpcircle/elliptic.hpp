#pragma once

/**
 * @file elliptic.hpp
 * @brief Exact elliptic-curve arithmetic over Q for curves
 *        y^2 = x^3 + a2 x^2 + a4 x + a6.
 *
 * Chord-tangent group law, scalar multiplication, and bounded streaming
 * of integer combinations of a generator set.  All arithmetic is exact;
 * operations taking points validate them against the curve equation and
 * throw on off-curve input.
 */

#include <algorithm>
#include <cassert>
#include <cstdlib>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "gpcircle/rational.hpp"

namespace gpc {

/// Curve y^2 = x^3 + a2 x^2 + a4 x + a6.  The constructor rejects
/// singular cubics.
struct WeierstrassCurve {
    Rat a2, a4, a6;

    WeierstrassCurve(Rat a2_, Rat a4_, Rat a6_)
        : a2(std::move(a2_)), a4(std::move(a4_)), a6(std::move(a6_)) {
        // discriminant of x^3 + bx^2 + cx + d
        const Rat &b = a2, &c = a4, &d = a6;
        Rat disc = 18 * b * c * d - 4 * b * b * b * d + b * b * c * c - 4 * c * c * c - 27 * d * d;
        if (disc == 0) throw std::domain_error("WeierstrassCurve: singular cubic");
    }
};

/// Affine point or the point at infinity (the group identity).
class CurvePoint {
public:
    CurvePoint() : inf_(true) {}
    CurvePoint(Rat x, Rat y) : inf_(false), x_(std::move(x)), y_(std::move(y)) {}

    static CurvePoint infinity() { return CurvePoint(); }

    bool is_infinity() const { return inf_; }
    const Rat& x() const {
        assert(!inf_);
        return x_;
    }
    const Rat& y() const {
        assert(!inf_);
        return y_;
    }

    friend bool operator==(const CurvePoint& lhs, const CurvePoint& rhs) {
        if (lhs.inf_ || rhs.inf_) return lhs.inf_ == rhs.inf_;
        return lhs.x_ == rhs.x_ && lhs.y_ == rhs.y_;
    }

private:
    bool inf_;
    Rat x_, y_;
};

inline bool on_curve(const WeierstrassCurve& c, const CurvePoint& p) {
    if (p.is_infinity()) return true;
    const Rat& x = p.x();
    const Rat& y = p.y();
    return y * y == x * x * x + c.a2 * x * x + c.a4 * x + c.a6;
}

namespace detail {

inline void require_on_curve(const WeierstrassCurve& c, const CurvePoint& p, const char* who) {
    if (!on_curve(c, p)) throw std::invalid_argument(std::string(who) + ": point not on curve");
}

// Group law without the on-curve input check; inputs must lie on c.
inline CurvePoint add_unchecked(const WeierstrassCurve& c, const CurvePoint& p, const CurvePoint& q) {
    if (p.is_infinity()) return q;
    if (q.is_infinity()) return p;
    const Rat &x1 = p.x(), &y1 = p.y(), &x2 = q.x(), &y2 = q.y();
    Rat lambda;
    if (x1 == x2) {
        if (y1 != y2 || y1 == 0) return CurvePoint::infinity();  // P + (-P)
        lambda = (3 * x1 * x1 + 2 * c.a2 * x1 + c.a4) / (2 * y1);
    } else {
        lambda = (y2 - y1) / (x2 - x1);
    }
    Rat x3 = lambda * lambda - c.a2 - x1 - x2;
    Rat y3 = lambda * (x1 - x3) - y1;
    return CurvePoint(std::move(x3), std::move(y3));
}

}  // namespace detail

inline CurvePoint neg(const WeierstrassCurve& c, const CurvePoint& p) {
    detail::require_on_curve(c, p, "neg");
    if (p.is_infinity()) return p;
    return CurvePoint(p.x(), -p.y());
}

inline CurvePoint add(const WeierstrassCurve& c, const CurvePoint& p, const CurvePoint& q) {
    detail::require_on_curve(c, p, "add");
    detail::require_on_curve(c, q, "add");
    return detail::add_unchecked(c, p, q);
}

/// n-fold sum by double-and-add; n may be negative or zero.
inline CurvePoint scalar_mul(const WeierstrassCurve& c, Int n, const CurvePoint& p) {
    detail::require_on_curve(c, p, "scalar_mul");
    CurvePoint base = p;
    if (n < 0) {
        n = -n;
        if (!base.is_infinity()) base = CurvePoint(base.x(), -base.y());
    }
    CurvePoint acc = CurvePoint::infinity();
    while (n > 0) {
        if ((n & 1) != 0) acc = detail::add_unchecked(c, acc, base);
        n >>= 1;
        if (n > 0) base = detail::add_unchecked(c, base, base);
    }
    return acc;
}

/**
 * Lazy stream of the points sum(n_i * g_i) over all coefficient vectors
 * with |n_i| <= max_coeff, excluding infinity and repeated coordinates.
 * Vectors are visited by increasing sum |n_i|, ties broken by ascending
 * lexicographic order, so the stream is deterministic.
 */
class PointStream {
public:
    PointStream(const WeierstrassCurve& curve, std::vector<CurvePoint> gens, int max_coeff)
        : curve_(curve), gens_(std::move(gens)) {
        if (max_coeff < 1) throw std::invalid_argument("PointStream: max_coeff must be positive");
        for (const auto& g : gens_) detail::require_on_curve(curve_, g, "PointStream");

        // Small multiples of each generator, reused across combinations.
        multiples_.resize(gens_.size());
        for (std::size_t i = 0; i < gens_.size(); ++i) {
            auto& m = multiples_[i];
            m.reserve(2 * max_coeff + 1);
            for (int n = -max_coeff; n <= max_coeff; ++n)
                m.push_back(scalar_mul(curve_, n, gens_[i]));
        }

        std::vector<int> v(gens_.size(), -max_coeff);
        if (!gens_.empty()) {
            for (;;) {
                bool zero = true;
                for (int c : v)
                    if (c != 0) zero = false;
                if (!zero) vectors_.push_back(v);
                std::size_t i = v.size();
                while (i > 0 && v[i - 1] == max_coeff) v[--i] = -max_coeff;
                if (i == 0) break;
                ++v[i - 1];
            }
            std::stable_sort(vectors_.begin(), vectors_.end(),
                             [](const std::vector<int>& a, const std::vector<int>& b) {
                                 long sa = 0, sb = 0;
                                 for (int c : a) sa += std::abs(c);
                                 for (int c : b) sb += std::abs(c);
                                 if (sa != sb) return sa < sb;
                                 return a < b;
                             });
        }
        max_coeff_ = max_coeff;
    }

    /// Next fresh point, or empty when the stream is exhausted.
    std::optional<CurvePoint> next() {
        while (cursor_ < vectors_.size()) {
            const auto& v = vectors_[cursor_++];
            last_vector_ = v;
            CurvePoint p = CurvePoint::infinity();
            for (std::size_t i = 0; i < v.size(); ++i)
                p = detail::add_unchecked(curve_, p, multiples_[i][static_cast<std::size_t>(v[i] + max_coeff_)]);
            if (p.is_infinity()) continue;
            auto key = std::make_pair(p.x(), p.y());
            if (!seen_.insert(std::move(key)).second) continue;
            return p;
        }
        return std::nullopt;
    }

    /// Coefficient vector of the most recently yielded point.
    const std::vector<int>& last_vector() const { return last_vector_; }

private:
    WeierstrassCurve curve_;
    std::vector<CurvePoint> gens_;
    std::vector<std::vector<CurvePoint>> multiples_;
    std::vector<std::vector<int>> vectors_;
    std::vector<int> last_vector_;
    std::size_t cursor_ = 0;
    int max_coeff_ = 0;
    std::set<std::pair<Rat, Rat>> seen_;
};

/// Eager form of PointStream, for small coefficient bounds.
inline std::vector<CurvePoint> stream_points(const WeierstrassCurve& curve,
                                             const std::vector<CurvePoint>& gens, int max_coeff) {
    PointStream s(curve, gens, max_coeff);
    std::vector<CurvePoint> out;
    while (auto p = s.next()) out.push_back(std::move(*p));
    return out;
}

}  // namespace gpc
