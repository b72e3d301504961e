#pragma once

#include <algorithm>
#include <chrono>
#include <utility>
#include <vector>

#include "disccount/errors.hpp"
#include "disccount/intmath.hpp"
#include "disccount/parallel.hpp"
#include "disccount/residues.hpp"

namespace disccount {

enum class Policy { DegreeTwoOnly, AllTriples };
enum class Method { Brute, Interval, Octant };
enum class FixedDiscStrategy { DivideLoop, CongruenceScan };

inline constexpr i64 kBruteCap = 200;
inline constexpr i64 kIntervalCap = i64{1} << 20;
inline constexpr i64 kFixedDiscCap = 4096;

/// Height bound Q, discriminant bound D, and the degeneracy policy.
struct CountQuery {
    i64 Q = 1;
    i64 D = 0;
    Policy policy = Policy::DegreeTwoOnly;
    bool force = false;    // bypass cost guards
    unsigned threads = 1;

    /// Set when (Q, D) lies outside 1 <= D <= Q^2/2.
    bool hypothesis_warning() const { return D < 1 || 2 * static_cast<i128>(D) > static_cast<i128>(Q) * Q; }
};

struct CountResult {
    u64 count = 0;
    Method method = Method::Brute;
    std::chrono::nanoseconds elapsed{0};
};

/// Exact split of the all-triples count by the sign structure of (q, n, r),
/// where q is the linear, n the leading and r the constant coefficient.
struct OctantBreakdown {
    u64 c0 = 0;                 // q = 0
    u64 c1 = 0;                 // q != 0, nr = 0
    u64 n1 = 0;                 // 1 <= q,n,r <= Q, |q^2 - 4nr| <= D
    u64 n2 = 0;                 // 1 <= q,n,r <= Q, q^2 + 4nr <= D
    u64 degenerate_leading = 0; // n = 0

    u64 all_triples() const { return c0 + c1 + 4 * n1 + 4 * n2; }
    u64 degree_two() const { return all_triples() - degenerate_leading; }
};

namespace detail {

inline void validate(const CountQuery &q, i64 cap, const char *who) {
    if (q.Q < 1) throw DomainError(std::string(who) + ": Q must be >= 1");
    if (q.D < 0) throw DomainError(std::string(who) + ": D must be >= 0");
    if (!q.force && q.Q > cap) throw GuardExceeded(std::string(who) + ": Q exceeds cost guard");
    if (q.Q > (i64{1} << 30)) throw ArithmeticOverflow(std::string(who) + ": Q beyond 2^30");
}

/// |b^2 - 4ac| <= 5Q^2 always, so larger D changes nothing.
inline i64 effective_d(const CountQuery &q) { return std::min(q.D, 5 * q.Q * q.Q); }

/// Number of |b| <= Q with b^2 <= D.
inline i64 small_squares(i64 Q, i64 D) { return std::min(isqrt(D), Q); }

/// Number of c in [lo_c, hi_c] with lo <= 4ac <= hi, for a != 0.
inline i64 c_in_band(i64 a, i64 lo, i64 hi, i64 lo_c, i64 hi_c) {
    const i64 four_a = 4 * a;
    i64 first, last;
    if (four_a > 0) {
        first = ceil_div(lo, four_a);
        last = floor_div(hi, four_a);
    } else {
        first = ceil_div(hi, four_a);
        last = floor_div(lo, four_a);
    }
    first = std::max(first, lo_c);
    last = std::min(last, hi_c);
    return last >= first ? last - first + 1 : 0;
}

template <class F>
auto timed(F &&f) {
    const auto t0 = std::chrono::steady_clock::now();
    auto value = f();
    return std::pair{value, std::chrono::duration_cast<std::chrono::nanoseconds>(
                                std::chrono::steady_clock::now() - t0)};
}

} // namespace detail

/// Full enumeration of (b, a, c) in [-Q, Q]^3 with |b^2 - 4ac| <= D.
inline CountResult count_brute(const CountQuery &query) {
    detail::validate(query, kBruteCap, "count_brute");
    const i64 Q = query.Q, D = detail::effective_d(query);
    const bool skip_degenerate = query.policy == Policy::DegreeTwoOnly;
    auto [count, elapsed] = detail::timed([&] {
        return parallel_sum(-Q, Q, query.threads, [&](i64 b) -> u64 {
            u64 s = 0;
            for (i64 a = -Q; a <= Q; ++a) {
                if (skip_degenerate && a == 0) continue;
                for (i64 c = -Q; c <= Q; ++c) {
                    const i64 d = b * b - 4 * a * c;
                    s += (d <= D && d >= -D);
                }
            }
            return s;
        });
    });
    return {count, Method::Brute, elapsed};
}

/// For fixed (a, b) with a != 0 the admissible c form an interval; count it
/// with exact floor/ceil division. The a = 0 stratum is closed form.
inline CountResult count_interval(const CountQuery &query) {
    detail::validate(query, kIntervalCap, "count_interval");
    const i64 Q = query.Q, D = detail::effective_d(query);
    auto [count, elapsed] = detail::timed([&] {
        u64 total = parallel_sum(-Q, Q, query.threads, [&](i64 a) -> u64 {
            if (a == 0) return 0;
            u64 s = 0;
            for (i64 b = -Q; b <= Q; ++b)
                s += detail::c_in_band(a, b * b - D, b * b + D, -Q, Q);
            return s;
        });
        if (query.policy == Policy::AllTriples)
            total += static_cast<u64>(2 * detail::small_squares(Q, D) + 1) * (2 * Q + 1);
        return total;
    });
    return {count, Method::Interval, elapsed};
}

/// Computes the octant decomposition; n1 and n2 by interval counting over the
/// positive octant, c0 by a divisor-style sum, the rest in closed form.
inline OctantBreakdown octant_breakdown(const CountQuery &query) {
    detail::validate(query, kIntervalCap, "count_octant");
    const i64 Q = query.Q, D = detail::effective_d(query);
    const i64 s = detail::small_squares(Q, D);
    OctantBreakdown out;

    const i64 quarter = D / 4;
    const u64 nonzero_pairs = parallel_sum(1, Q, query.threads, [&](i64 n) -> u64 {
        return static_cast<u64>(std::min(Q, quarter / n));
    });
    out.c0 = static_cast<u64>(4 * Q + 1) + 4 * nonzero_pairs;
    out.c1 = static_cast<u64>(2 * s) * (4 * Q + 1);
    out.degenerate_leading = static_cast<u64>(2 * s + 1) * (2 * Q + 1);

    out.n1 = parallel_sum(1, Q, query.threads, [&](i64 n) -> u64 {
        u64 acc = 0;
        for (i64 q = 1; q <= Q; ++q)
            acc += detail::c_in_band(n, q * q - D, q * q + D, 1, Q);
        return acc;
    });
    out.n2 = parallel_sum(1, Q, query.threads, [&](i64 n) -> u64 {
        u64 acc = 0;
        for (i64 q = 1; q * q < D && q <= Q; ++q) {
            const i64 r_max = std::min(Q, floor_div(D - q * q, 4 * n));
            if (r_max >= 1) acc += static_cast<u64>(r_max);
        }
        return acc;
    });
    return out;
}

inline std::pair<CountResult, OctantBreakdown> count_octant(const CountQuery &query) {
    auto [breakdown, elapsed] = detail::timed([&] { return octant_breakdown(query); });
    const u64 total = query.policy == Policy::AllTriples ? breakdown.all_triples() : breakdown.degree_two();
    return {CountResult{total, Method::Octant, elapsed}, breakdown};
}

inline CountResult count(const CountQuery &query, Method method) {
    switch (method) {
    case Method::Brute: return count_brute(query);
    case Method::Interval: return count_interval(query);
    case Method::Octant: return count_octant(query).first;
    }
    throw DomainError("count: unknown method");
}

/// Number of (q, n, r) in [1, Q]^3 with q^2 - 4nr = t.
inline u64 count_fixed_disc(i64 t, i64 Q, FixedDiscStrategy strategy, bool force = false) {
    if (Q < 1) throw DomainError("count_fixed_disc: Q must be >= 1");
    if (!force && Q > kFixedDiscCap) throw GuardExceeded("count_fixed_disc: Q > 4096");
    if (static_cast<i128>(t < 0 ? -t : t) > 5 * static_cast<i128>(Q) * Q)
        throw DomainError("count_fixed_disc: |t| > 5Q^2");

    const i64 residue = mod_floor(t, 4);
    if (residue != 0 && residue != 1) return 0;

    u64 total = 0;
    if (strategy == FixedDiscStrategy::DivideLoop) {
        for (i64 q = 1; q <= Q; ++q) {
            const i64 num = q * q - t;
            if (num <= 0) continue;
            for (i64 n = 1; n <= Q; ++n) {
                const i64 m = 4 * n;
                if (num % m == 0 && num / m <= Q) ++total;
            }
        }
        return total;
    }

    for (i64 n = 1; n <= Q; ++n) {
        const i64 m = 4 * n;
        const i64 top = m * Q + t;
        if (top < 1) continue;
        const i64 lo = std::max<i64>(1, isqrt_ceil(std::max<i64>(m + t, 1)));
        const i64 hi = std::min(Q, isqrt(top));
        if (hi < lo) continue;
        const auto roots = square_roots_mod(t, m);
        total += static_cast<u64>(count_in_class(roots, m, lo, hi));
    }
    return total;
}

} // namespace disccount
