#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

#include "disccount/errors.hpp"
#include "disccount/intmath.hpp"
#include "disccount/parallel.hpp"

namespace disccount {

using cplx = std::complex<double>;

/// e(k / m) = exp(2 pi i k / m) for an exact residue k in [0, m).
inline cplx unit_root(i64 k, i64 m) {
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(m);
    return {std::cos(angle), std::sin(angle)};
}

/// Pairwise (tree) summation of term(i) for i in [lo, hi).
template <class Term>
cplx pairwise_sum(i64 lo, i64 hi, const Term &term) {
    if (hi - lo <= 32) {
        cplx s{0.0, 0.0};
        for (i64 i = lo; i < hi; ++i) s += term(i);
        return s;
    }
    const i64 mid = lo + (hi - lo) / 2;
    return pairwise_sum(lo, mid, term) + pairwise_sum(mid, hi, term);
}

/// a x^2 mod m with exact integer reduction.
inline i64 quad_residue(i64 a, i64 x, i64 m) {
    const i64 xr = mod_floor(x, m);
    const i128 sq = static_cast<i128>(xr) * xr % m;
    return static_cast<i64>(static_cast<i128>(mod_floor(a, m)) * sq % m);
}

/// Parameters of the incomplete Gauss sum sum_{x=1}^{N} e(a x^2 / m).
struct GaussSumSpec {
    i64 a = 1;
    i64 m = 1;
    i64 N = 1;

    i64 delta() const { return gcd64(a, m); }
};

inline cplx gauss_incomplete(const GaussSumSpec &spec) {
    if (spec.m < 1 || spec.N < 1 || spec.N > spec.m)
        throw DomainError("gauss_incomplete: need m >= 1 and 1 <= N <= m");
    return pairwise_sum(1, spec.N + 1, [&](i64 x) { return unit_root(quad_residue(spec.a, x, spec.m), spec.m); });
}

/// 5 sqrt(m ln m).
inline double lemma2_bound(i64 m) {
    const double md = static_cast<double>(m);
    return 5.0 * std::sqrt(md * std::log(md));
}

struct Lemma2Witness {
    i64 a = 0;
    i64 m = 0;
    i64 N = 0;
    double modulus = 0.0;
    double bound = 0.0;
};

struct Lemma2Report {
    double max_ratio = 0.0;
    Lemma2Witness argmax;
    std::vector<Lemma2Witness> violations;
    u64 pairs_checked = 0;
};

struct Lemma2Sampling {
    bool exhaustive = true;
    std::uint64_t seed = 1;
    u64 trials = 0;

    static Lemma2Sampling Exhaustive() { return {}; }
    static Lemma2Sampling Random(std::uint64_t seed, u64 trials) { return {false, seed, trials}; }
};

namespace detail {

/// Folds every prefix N = 1..m of the sum for (a, m) into `report`.
inline void lemma2_scan_pair(i64 a, i64 m, Lemma2Report &report) {
    const double bound = lemma2_bound(m);
    cplx s{0.0, 0.0};
    for (i64 N = 1; N <= m; ++N) {
        s += unit_root(quad_residue(a, N, m), m);
        const double mod = std::abs(s);
        const double ratio = mod / bound;
        if (ratio > report.max_ratio) {
            report.max_ratio = ratio;
            report.argmax = {a, m, N, mod, bound};
        }
        if (mod > bound) report.violations.push_back({a, m, N, mod, bound});
    }
    ++report.pairs_checked;
}

inline void merge(Lemma2Report &into, const Lemma2Report &from) {
    if (from.max_ratio > into.max_ratio) {
        into.max_ratio = from.max_ratio;
        into.argmax = from.argmax;
    }
    into.violations.insert(into.violations.end(), from.violations.begin(), from.violations.end());
    into.pairs_checked += from.pairs_checked;
}

} // namespace detail

/// Largest |S| / (5 sqrt(m ln m)) over m in [m_lo, m_hi], a coprime to m,
/// and all N <= m. Violations are returned as data.
inline Lemma2Report lemma2_scan(i64 m_lo, i64 m_hi, Lemma2Sampling sampling = Lemma2Sampling::Exhaustive(),
                                unsigned threads = 1) {
    if (m_lo < 2 || m_hi < m_lo) throw DomainError("lemma2_scan: need 2 <= m_lo <= m_hi");

    if (!sampling.exhaustive) {
        Lemma2Report report;
        std::mt19937_64 rng(sampling.seed);
        std::uniform_int_distribution<i64> pick_m(m_lo, m_hi);
        for (u64 t = 0; t < sampling.trials; ++t) {
            const i64 m = pick_m(rng);
            std::uniform_int_distribution<i64> pick_a(1, m - 1);
            i64 a = pick_a(rng);
            while (gcd64(a, m) != 1) a = pick_a(rng);
            detail::lemma2_scan_pair(a, m, report);
        }
        return report;
    }

    // one slot per modulus, merged in order so the report is thread-independent
    std::vector<Lemma2Report> per_m(static_cast<std::size_t>(m_hi - m_lo + 1));
    parallel_sum(m_lo, m_hi, threads, [&](i64 m) -> u64 {
        auto &slot = per_m[static_cast<std::size_t>(m - m_lo)];
        for (i64 a = 1; a < m; ++a)
            if (gcd64(a, m) == 1) detail::lemma2_scan_pair(a, m, slot);
        return 0;
    });
    Lemma2Report report;
    for (const auto &r : per_m) detail::merge(report, r);
    return report;
}

struct GcdRatio {
    cplx value;
    double ratio = 0.0;
    i64 delta = 1;
};

inline constexpr i64 kGcdRatioCap = 1'000'000;

/// sum_{x=1}^{X} e(a x^2 / m) via the reduction to modulus m / gcd(a, m),
/// cross-checked against direct summation. The ratio is |sum| over
/// (X sqrt(delta) / sqrt(m) + sqrt(m / delta)) sqrt(ln m).
inline GcdRatio gauss_gcd_ratio(i64 a, i64 m, i64 X) {
    if (m < 2 || X < 1) throw DomainError("gauss_gcd_ratio: need m >= 2, X >= 1");
    if (X > kGcdRatioCap) throw GuardExceeded("gauss_gcd_ratio: X > 1e6");

    const i64 ar = mod_floor(a, m);
    const i64 delta = gcd64(ar, m); // gcd(0, m) = m
    const i64 a1 = ar / delta, m1 = m / delta;

    auto reduced = [&](i64 x) { return unit_root(quad_residue(a1, x, m1), m1); };
    const i64 blocks = X / m1;
    const cplx full = pairwise_sum(1, m1 + 1, reduced);
    const cplx tail = pairwise_sum(blocks * m1 + 1, X + 1, reduced);
    const cplx by_blocks = static_cast<double>(blocks) * full + tail;

    const cplx direct = pairwise_sum(1, X + 1, [&](i64 x) { return unit_root(quad_residue(ar, x, m), m); });
    if (std::abs(by_blocks - direct) > 1e-6 * std::max(1.0, std::abs(direct)))
        throw NumericMismatch("gauss_gcd_ratio: block and direct evaluation disagree");

    const double md = static_cast<double>(m), dd = static_cast<double>(delta);
    const double scale = (static_cast<double>(X) * std::sqrt(dd) / std::sqrt(md) + std::sqrt(md / dd)) *
                         std::sqrt(std::log(md));
    return {direct, std::abs(direct) / scale, delta};
}

/// sum_{|a| <= D} e(-a c / 4n) in closed form sin(pi c (2D+1) / 4n) / sin(pi c / 4n).
/// Angles are reduced exactly modulo 2 pi before evaluation.
inline double kernel_sum(i64 c, i64 n, i64 D) {
    if (n < 1 || D < 0) throw DomainError("kernel_sum: need n >= 1, D >= 0");
    const i64 period = 8 * n; // sin(pi k / 4n) has period 8n in k
    if (mod_floor(c, 4 * n) == 0) throw DomainError("kernel_sum: c = 0 (mod 4n)");

    const i64 knum = static_cast<i64>(mod_floor(static_cast<i64>((static_cast<i128>(c) * (2 * D + 1)) % period), period));
    const i64 kden = mod_floor(c, period);
    const double unit = std::numbers::pi / static_cast<double>(4 * n);
    const double den = std::sin(unit * static_cast<double>(kden));
    if (std::abs(den) < 1e-300) throw DomainError("kernel_sum: vanishing denominator");
    return std::sin(unit * static_cast<double>(knum)) / den;
}

/// The same kernel by direct (2D+1)-term summation.
inline cplx kernel_sum_direct(i64 c, i64 n, i64 D) {
    if (n < 1 || D < 0) throw DomainError("kernel_sum_direct: need n >= 1, D >= 0");
    const i64 m = 4 * n;
    return pairwise_sum(-D, D + 1, [&](i64 a) {
        return unit_root(mod_floor(static_cast<i64>(-(static_cast<i128>(a) * c % m)), m), m);
    });
}

/// Parameters of sum_{x=1}^{P} min(U, 1 / ||alpha x + beta||), alpha = a/q + theta/q^2.
struct MinSumSpec {
    i64 a = 0;
    i64 q = 1;
    double theta = 0.0;
    double beta = 0.0;
    double U = 1.0;
    i64 P = 1;
};

struct MinSumValue {
    double value = 0.0;
    double bound = 0.0;
};

/// Distance from y to the nearest integer.
inline double dist_to_int(double y) {
    const double frac = y - std::floor(y);
    return std::min(frac, 1.0 - frac);
}

/// Evaluates the min-sum and 6(P/q + 1)(U + q ln q); throws BoundViolation
/// if the value exceeds the bound.
inline MinSumValue minsum_eval(const MinSumSpec &s) {
    if (s.q < 1 || gcd64(s.a, s.q) != 1) throw DomainError("minsum_eval: need q >= 1, gcd(a, q) = 1");
    if (!(std::abs(s.theta) <= 1.0)) throw DomainError("minsum_eval: |theta| > 1");
    if (!(s.U > 0.0) || s.P < 1) throw DomainError("minsum_eval: need U > 0, P >= 1");

    const double qd = static_cast<double>(s.q);
    const bool integral_shift = s.theta == 0.0 && s.beta == std::floor(s.beta);
    double value = 0.0;
    for (i64 x = 1; x <= s.P; ++x) {
        const i64 ax = mod_floor(static_cast<i64>(static_cast<i128>(s.a) * x % s.q), s.q);
        double dist;
        if (integral_shift && ax == 0) {
            dist = 0.0;
        } else {
            const double xd = static_cast<double>(x);
            dist = dist_to_int(static_cast<double>(ax) / qd + s.theta * xd / (qd * qd) + s.beta);
        }
        value += (dist == 0.0 || 1.0 / dist >= s.U) ? s.U : 1.0 / dist;
    }
    const double bound = 6.0 * (static_cast<double>(s.P) / qd + 1.0) * (s.U + qd * std::log(qd));
    if (value > bound) throw BoundViolation("minsum_eval: value exceeds the min-sum bound");
    return {value, bound};
}

} // namespace disccount
