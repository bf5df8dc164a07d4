#pragma once

/**
 * @file search.hpp
 * @brief Bounded-height search for circles carrying four rational points
 *        in geometric progression.
 *
 * The engine enumerates reduced triples u2 = p1/p2, u3 = q1/q2,
 * r = r1/r2 with r1 > r2 >= 1 and |p1| + p2 + |q1| + q2 + r1 + r2 <=
 * bound, in a fixed deterministic order: ascending total height, ties
 * broken lexicographically on (p1, p2, q1, q2, r1, r2).  A triple
 * survives when the two discriminants phi1, phi2 are rational squares;
 * survivors are assembled into witnesses, verified and normalized.
 *
 * The per-triple filter runs on machine integers (the discriminant
 * numerators fit in 64 bits for bounds up to a few hundred, their
 * products in 128), with a quadratic-residue prefilter in front of the
 * exact square root.  Survivors are re-derived from scratch in rational
 * arithmetic, so the fast path cannot introduce false positives; a
 * property test checks it introduces no false negatives either.
 *
 * Sharding: triple k is processed iff k mod shard_count == shard_index,
 * k being the index in the deterministic enumeration order.  Shards are
 * independent; merging shard hit streams by k reproduces the unsharded
 * stream exactly.
 */

#include <array>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <optional>
#include <set>
#include <thread>
#include <vector>

#include "gpcircle/circle.hpp"
#include "gpcircle/rational.hpp"

namespace gpc {

/// Discriminant of the u1-quadratic (phi1), as the exact product of its
/// two factors.
inline Rat phi1(const Rat& r, const Rat& u2, const Rat& u3) {
    Rat f1 = r * u2 * u2 * u3 * u3 + 2 * r * u2 * u3 * u3 + r * u2 * u2 + r * u3 * u3 -
             2 * u2 * u2 * u3 + 2 * u2 * u3 * u3 + 2 * r * u2 + r + 2 * u2 - 2 * u3;
    Rat f2 = r * u2 * u2 * u3 * u3 - 2 * r * u2 * u3 * u3 + r * u2 * u2 + r * u3 * u3 +
             2 * u2 * u2 * u3 - 2 * u2 * u3 * u3 - 2 * r * u2 + r - 2 * u2 + 2 * u3;
    return f1 * f2;
}

/// Discriminant of the u4-quadratic (phi2), including its leading minus sign.
inline Rat phi2(const Rat& r, const Rat& u2, const Rat& u3) {
    Rat f1 = 2 * r * u2 * u2 * u3 - 2 * r * u2 * u3 * u3 + u2 * u2 * u3 * u3 +
             2 * u2 * u2 * u3 - 2 * r * u2 + 2 * r * u3 + u2 * u2 + u3 * u3 + 2 * u3 + 1;
    Rat f2 = 2 * r * u2 * u2 * u3 - 2 * r * u2 * u3 * u3 - u2 * u2 * u3 * u3 +
             2 * u2 * u2 * u3 - 2 * r * u2 + 2 * r * u3 - u2 * u2 - u3 * u3 + 2 * u3 - 1;
    return -f1 * f2;
}

/// Quadratic in u1 forcing h1 = h2.  Leading and constant coefficients
/// coincide, so rational roots come in reciprocal pairs.
inline QuadraticQ quadratic_u1(const Rat& r, const Rat& u2, const Rat& u3) {
    Rat a = r * u2 * u3 * u3 - u2 * u2 * u3 + u2 * u3 * u3 + r * u2 + u2 - u3;
    Rat b = -(u2 * u2 + 1) * (u3 * u3 + 1) * r;
    return {a, std::move(b), a};
}

/// Quadratic in u4 forcing h2 = h3; same reciprocal-root structure.
inline QuadraticQ quadratic_u4(const Rat& r, const Rat& u2, const Rat& u3) {
    Rat a = r * u2 * u2 * u3 - r * u2 * u3 * u3 + u2 * u2 * u3 - r * u2 + r * u3 + u3;
    Rat b = -(u2 * u2 + 1) * (u3 * u3 + 1);
    return {a, std::move(b), a};
}

namespace detail {

/**
 * Witness assembly shared by the search and the curve pipelines: given
 * the full parameter set (ratio and four circle parameters, a = 1),
 * check the three center values agree, build the points, verify and
 * normalize.  Accepts any positive ratio != 1.
 */
inline std::optional<CanonicalWitness> assemble_witness(const Rat& r, const Rat& u1, const Rat& u2,
                                                        const Rat& u3, const Rat& u4) {
    if (r <= 0 || r == 1) return std::nullopt;
    Rat one(1);
    Rat h = h_from_pair(one, r, u2, u3);
    if (h_from_pair(one, r, u1, u2) != h) return std::nullopt;
    if (h_from_pair(one, r, u3, u4) != h) return std::nullopt;
    Circle circle{std::move(h), one};
    GPWitness w{circle,
                {point_from_param(circle, u1), point_from_param(circle, u2),
                 point_from_param(circle, u3), point_from_param(circle, u4)},
                r};
    if (!verify_witness(w)) return std::nullopt;
    return normalize_witness(w);
}

}  // namespace detail

/**
 * Full per-triple pipeline: discriminant square tests, the two
 * quadratics (skipped as degenerate when a leading coefficient
 * vanishes), assembly, verification, normalization.  Every failure maps
 * to an empty result.  Requires r > 1.
 */
inline std::optional<CanonicalWitness> candidate_from_triple(const Rat& r, const Rat& u2,
                                                             const Rat& u3) {
    if (r <= 1) throw std::invalid_argument("candidate_from_triple: requires r > 1");
    // u2 == u3 or u2*u3 == 1 force equal abscissae x2 == x3; both
    // discriminants are identically square there, so cut early.
    if (u2 == u3 || u2 * u3 == 1) return std::nullopt;
    if (!rat_sqrt(phi1(r, u2, u3))) return std::nullopt;
    if (!rat_sqrt(phi2(r, u2, u3))) return std::nullopt;
    QuadraticQ q1 = quadratic_u1(r, u2, u3);
    QuadraticQ q4 = quadratic_u4(r, u2, u3);
    if (q1.A == 0 || q4.A == 0) return std::nullopt;  // degenerate: linear equation
    auto roots1 = solve_quadratic(q1);
    auto roots4 = solve_quadratic(q4);
    if (roots1.empty() || roots4.empty()) return std::nullopt;
    // Root choice is immaterial: the roots of each quadratic are
    // reciprocal, and reciprocal parameters give the same abscissa.
    return detail::assemble_witness(r, roots1.front(), u2, u3, roots4.front());
}

struct SearchTriple {
    Rat u2, u3, r;
    Rat phi1, phi2;
};

struct SearchConfig {
    std::int64_t bound = 0;
    int shard_index = 0;
    int shard_count = 1;
};

/// A successful triple: its enumeration index, parameters, and witness.
struct SearchHit {
    std::uint64_t index = 0;
    SearchTriple triple;
    CanonicalWitness witness;
};

struct SearchStats {
    std::uint64_t enumerated = 0;         ///< triples visited in this shard
    std::uint64_t filter_survivors = 0;   ///< nondegenerate, both discriminants square
    std::uint64_t passing = 0;            ///< triples yielding a verified witness
};

struct SearchReport {
    std::vector<SearchHit> hits;       ///< every successful triple, in k order
    std::vector<SearchHit> witnesses;  ///< hits deduplicated by witness, first occurrence
    SearchStats stats;
};

namespace detail {

/// Raw enumerated triple (all values well within int64 range).
struct RawTriple {
    std::int64_t p1, p2, q1, q2, r1, r2;
};

/**
 * Visit every triple with total height <= bound in the deterministic
 * order; f(k, t) is called for each.  Heights: |p1|+p2, |q1|+q2, r1+r2.
 */
template <class F>
void for_each_triple(std::int64_t bound, F&& f) {
    // Coprimality table: coprime[a*(B+1)+b] for 0 <= a,b <= B.  Only
    // built for small bounds; the walk falls back to gcd above that.
    const bool use_table = bound <= 2048;
    std::vector<std::uint8_t> table;
    const std::size_t stride = static_cast<std::size_t>(bound) + 1;
    if (use_table && bound >= 5) {
        table.assign(stride * stride, 0);
        for (std::int64_t a = 0; a <= bound; ++a)
            for (std::int64_t b = 0; b <= bound; ++b)
                table[static_cast<std::size_t>(a) * stride + static_cast<std::size_t>(b)] =
                    std::gcd(a, b) == 1 ? 1 : 0;
    }
    auto coprime = [&](std::int64_t a, std::int64_t b) {
        return use_table ? table[static_cast<std::size_t>(a) * stride + static_cast<std::size_t>(b)] != 0
                         : std::gcd(a, b) == 1;
    };

    std::uint64_t k = 0;
    for (std::int64_t H = 5; H <= bound; ++H) {
        for (std::int64_t p1 = -(H - 5); p1 <= H - 5; ++p1) {
            const std::int64_t ap1 = p1 < 0 ? -p1 : p1;
            for (std::int64_t p2 = 1; p2 <= H - ap1 - 4; ++p2) {
                if (!coprime(ap1, p2)) continue;
                const std::int64_t rem = H - ap1 - p2;
                for (std::int64_t q1 = -(rem - 4); q1 <= rem - 4; ++q1) {
                    const std::int64_t aq1 = q1 < 0 ? -q1 : q1;
                    for (std::int64_t q2 = 1; q2 <= rem - aq1 - 3; ++q2) {
                        if (!coprime(aq1, q2)) continue;
                        const std::int64_t m = rem - aq1 - q2;  // r1 + r2, >= 3
                        // ascending r1 means descending r2; r1 > r2 >= 1,
                        // and gcd(r1, r2) == gcd(m, r2)
                        for (std::int64_t r2 = (m - 1) / 2; r2 >= 1; --r2) {
                            if (!coprime(m, r2)) continue;
                            f(k, RawTriple{p1, p2, q1, q2, m - r2, r2});
                            ++k;
                        }
                    }
                }
            }
        }
    }
}

// ---- fast per-triple discriminant filter (exact) --------------------

using u128 = unsigned __int128;
using i128 = __int128;

/// floor square root of a 128-bit value, float-seeded, exactly corrected.
inline u128 u128_isqrt(u128 v) {
    if (v == 0) return 0;
    auto s = static_cast<u128>(sqrtl(static_cast<long double>(v)));
    while (s > 0 && s * s > v) --s;
    while ((s + 1) * (s + 1) <= v) ++s;
    return s;
}

struct SquareTables {
    std::array<bool, 64> mod64{};
    std::vector<bool> mod45045;  // 45045 = 63 * 65 * 11

    SquareTables() : mod45045(45045, false) {
        for (int i = 0; i < 64; ++i) mod64[static_cast<std::size_t>(i * i % 64)] = true;
        for (long i = 0; i < 45045; ++i) mod45045[static_cast<std::size_t>(i * i % 45045)] = true;
    }
};

inline bool u128_is_square(u128 v) {
    static const SquareTables tables;
    if (!tables.mod64[static_cast<std::size_t>(v & 63)]) return false;
    if (!tables.mod45045[static_cast<std::size_t>(v % 45045)]) return false;
    u128 s = u128_isqrt(v);
    return s * s == v;
}

/// product >= 0 and a perfect square, computed in 128-bit arithmetic.
inline bool product_is_square(std::int64_t a, std::int64_t b) {
    i128 p = static_cast<i128>(a) * static_cast<i128>(b);
    if (p < 0) return false;
    return u128_is_square(static_cast<u128>(p));
}

/**
 * Exact discriminant filter over machine integers.  Clearing the
 * denominator r2*p2^2*q2^2 (a square times r2) turns "phi is a rational
 * square" into "N1*N2 is a perfect square" for integer factor values
 * N1, N2; the identities behind the factor forms are checked against
 * the rational phi1/phi2 by a property test.  Valid for bounds up to
 * ~330 (|Ni| < 2^46 there).
 */
inline bool triple_filter_i64(const RawTriple& t) {
    const std::int64_t p1 = t.p1, p2 = t.p2, q1 = t.q1, q2 = t.q2, r1 = t.r1, r2 = t.r2;
    // tau-numerator: zero iff u2 == u3 or u2*u3 == 1 (degenerate)
    const std::int64_t T = (p1 * q2 - q1 * p2) * (p2 * q2 - p1 * q1);
    if (T == 0) return false;
    const std::int64_t Q2 = q1 * q1 + q2 * q2;
    const std::int64_t P2 = p1 * p1 + p2 * p2;
    // phi1 factors scaled by r2*p2^2*q2^2
    const std::int64_t n1 = r1 * (p1 + p2) * (p1 + p2) * Q2 + 2 * r2 * T;
    const std::int64_t n2 = r1 * (p1 - p2) * (p1 - p2) * Q2 - 2 * r2 * T;
    if (!product_is_square(n1, n2)) return false;
    // phi2 factors scaled the same way
    const std::int64_t m1 = r2 * P2 * (q1 + q2) * (q1 + q2) - 2 * r1 * T;
    const std::int64_t m2 = r2 * P2 * (q1 - q2) * (q1 - q2) + 2 * r1 * T;
    if (!product_is_square(m1, m2)) return false;
    // degenerate (linear) quadratics are skipped
    const std::int64_t lead1 = (r1 + r2) * p1 * p2 * Q2 - r2 * q1 * q2 * P2;
    if (lead1 == 0) return false;
    const std::int64_t lead4 = r2 * q1 * q2 * P2 - r1 * T;
    return lead4 != 0;
}

/// Rational-arithmetic version of the filter, for arbitrary bounds and
/// as the oracle the fast path is tested against.
inline bool triple_filter_rat(const Rat& r, const Rat& u2, const Rat& u3) {
    if (u2 == u3 || u2 * u3 == 1) return false;
    if (!rat_sqrt(phi1(r, u2, u3))) return false;
    if (!rat_sqrt(phi2(r, u2, u3))) return false;
    return quadratic_u1(r, u2, u3).A != 0 && quadratic_u4(r, u2, u3).A != 0;
}

constexpr std::int64_t kFastFilterMaxBound = 330;

}  // namespace detail

/**
 * Run one shard of the search.  Returns every successful triple (in
 * enumeration order, tagged with its index k) plus the deduplicated
 * witness list and counters.
 */
inline SearchReport search(const SearchConfig& cfg) {
    if (cfg.shard_count < 1 || cfg.shard_index < 0 || cfg.shard_index >= cfg.shard_count)
        throw std::invalid_argument("search: invalid shard spec");
    const bool fast = cfg.bound <= detail::kFastFilterMaxBound;
    SearchReport report;
    const auto count = static_cast<std::uint64_t>(cfg.shard_count);
    const auto index = static_cast<std::uint64_t>(cfg.shard_index);
    detail::for_each_triple(cfg.bound, [&](std::uint64_t k, const detail::RawTriple& t) {
        if (k % count != index) return;
        ++report.stats.enumerated;
        Rat r, u2, u3;
        bool survived;
        if (fast) {
            survived = detail::triple_filter_i64(t);
            if (survived) {
                u2 = make_rat(t.p1, t.p2);
                u3 = make_rat(t.q1, t.q2);
                r = make_rat(t.r1, t.r2);
            }
        } else {
            u2 = make_rat(t.p1, t.p2);
            u3 = make_rat(t.q1, t.q2);
            r = make_rat(t.r1, t.r2);
            survived = detail::triple_filter_rat(r, u2, u3);
        }
        if (!survived) return;
        ++report.stats.filter_survivors;
        auto witness = candidate_from_triple(r, u2, u3);
        if (!witness) return;
        ++report.stats.passing;
        report.hits.push_back(
            {k, SearchTriple{u2, u3, r, phi1(r, u2, u3), phi2(r, u2, u3)}, std::move(*witness)});
    });
    std::set<CanonicalWitness> seen;
    for (const auto& hit : report.hits)
        if (seen.insert(hit.witness).second) report.witnesses.push_back(hit);
    return report;
}

/**
 * Whole-range search fanned out over worker threads.  Thread j of T
 * processes the sub-shard (shard_index + shard_count * j) of
 * (shard_count * T), so the union over threads is exactly the requested
 * shard; results are merged in k order, making the output identical to
 * the single-threaded run.
 */
inline SearchReport search_parallel(const SearchConfig& cfg, unsigned threads) {
    if (threads <= 1) return search(cfg);
    std::vector<SearchReport> parts(threads);
    std::vector<std::thread> workers;
    workers.reserve(threads);
    for (unsigned j = 0; j < threads; ++j) {
        workers.emplace_back([&, j] {
            SearchConfig sub = cfg;
            sub.shard_index = cfg.shard_index + cfg.shard_count * static_cast<int>(j);
            sub.shard_count = cfg.shard_count * static_cast<int>(threads);
            parts[j] = search(sub);
        });
    }
    for (auto& w : workers) w.join();

    SearchReport merged;
    for (const auto& part : parts) {
        merged.stats.enumerated += part.stats.enumerated;
        merged.stats.filter_survivors += part.stats.filter_survivors;
        merged.stats.passing += part.stats.passing;
    }
    std::vector<std::size_t> cursor(threads, 0);
    for (;;) {
        std::size_t best = threads;
        for (std::size_t j = 0; j < threads; ++j)
            if (cursor[j] < parts[j].hits.size() &&
                (best == threads || parts[j].hits[cursor[j]].index < parts[best].hits[cursor[best]].index))
                best = j;
        if (best == threads) break;
        merged.hits.push_back(std::move(parts[best].hits[cursor[best]++]));
    }
    std::set<CanonicalWitness> seen;
    for (const auto& hit : merged.hits)
        if (seen.insert(hit.witness).second) merged.witnesses.push_back(hit);
    return merged;
}

}  // namespace gpc
