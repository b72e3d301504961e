#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "disccount/counting.hpp"
#include "disccount/expsums.hpp"
#include "disccount/polyquad.hpp"
#include "disccount/residues.hpp"

namespace disccount {

/// Outcome of a numerical scan. `notes` carries human-readable detail,
/// one entry per line.
struct CheckReport {
    explicit CheckReport(std::string name) : target(std::move(name)) {}

    std::string target;
    u64 cases = 0;
    u64 violations = 0;
    double max_ratio = 0.0;
    std::vector<std::string> notes;

    bool ok() const { return violations == 0; }

    void fail(std::string what) {
        ++violations;
        if (notes.size() < 50) notes.push_back("violation: " + std::move(what));
    }
};

namespace detail {
inline std::string fmt_case(std::initializer_list<std::pair<const char *, std::string>> kv) {
    std::string s;
    for (const auto &[k, v] : kv) {
        if (!s.empty()) s += ' ';
        s += k;
        s += '=';
        s += v;
    }
    return s;
}
inline std::string num(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.10g", x);
    return buf;
}
} // namespace detail

struct Lemma1Params {
    std::uint64_t seed = 1;
    u64 trials = 10'000;
    i64 q_max = 50;
    i64 P_max = 1000;
    double U_max = 1000.0;
};

/// Random min-sum specs against 6(P/q + 1)(U + q ln q).
inline CheckReport check_lemma1(const Lemma1Params &p) {
    CheckReport rep{"lemma1"};
    std::mt19937_64 rng(p.seed);
    std::uniform_int_distribution<i64> pick_q(1, p.q_max), pick_P(1, p.P_max);
    std::uniform_real_distribution<double> unit(-1.0, 1.0), pick_U(0.0, p.U_max);
    for (u64 t = 0; t < p.trials; ++t) {
        MinSumSpec s;
        s.q = pick_q(rng);
        std::uniform_int_distribution<i64> pick_a(-s.q, s.q);
        do s.a = pick_a(rng);
        while (gcd64(s.a, s.q) != 1);
        // a quarter of the cases use theta = 0 and rational beta to hit exact zeros
        if (t % 4 == 0) {
            s.theta = 0.0;
            s.beta = static_cast<double>(pick_a(rng)) / static_cast<double>(s.q);
        } else {
            s.theta = unit(rng);
            s.beta = 2.0 * unit(rng);
        }
        s.U = std::max(pick_U(rng), 1e-3);
        s.P = pick_P(rng);
        ++rep.cases;
        try {
            const auto v = minsum_eval(s);
            rep.max_ratio = std::max(rep.max_ratio, v.value / v.bound);
        } catch (const BoundViolation &) {
            rep.fail(detail::fmt_case({{"a", std::to_string(s.a)}, {"q", std::to_string(s.q)},
                                       {"theta", detail::num(s.theta)}, {"beta", detail::num(s.beta)},
                                       {"U", detail::num(s.U)}, {"P", std::to_string(s.P)}}));
        }
    }
    return rep;
}

/// Incomplete Gauss sums against 5 sqrt(m ln m). Lemma 2 only claims the
/// bound beyond an unquantified m0, so violations are tagged as such.
inline CheckReport check_lemma2(i64 m_lo, i64 m_hi, Lemma2Sampling sampling, unsigned threads = 1) {
    CheckReport rep{"lemma2"};
    const auto scan = lemma2_scan(m_lo, m_hi, sampling, threads);
    rep.cases = scan.pairs_checked;
    rep.max_ratio = scan.max_ratio;
    rep.notes.push_back("argmax: " + detail::fmt_case({{"a", std::to_string(scan.argmax.a)},
                                                       {"m", std::to_string(scan.argmax.m)},
                                                       {"N", std::to_string(scan.argmax.N)},
                                                       {"abs", detail::num(scan.argmax.modulus)},
                                                       {"bound", detail::num(scan.argmax.bound)}}));
    for (const auto &v : scan.violations)
        rep.fail(detail::fmt_case({{"a", std::to_string(v.a)}, {"m", std::to_string(v.m)},
                                   {"N", std::to_string(v.N)}, {"abs", detail::num(v.modulus)},
                                   {"bound", detail::num(v.bound)}}) +
                 " (possibly below m0)");
    return rep;
}

struct Lemma3Params {
    i64 m_max = 50;
    std::uint64_t seed = 1;
    u64 trials = 10'000;
    i64 m_random_max = 200;
};

/// Exhaustive small windows, the full-window identity, and random windows.
inline CheckReport check_lemma3(const Lemma3Params &p) {
    CheckReport rep{"lemma3"};
    auto run = [&](const ResidueWindow &w) {
        ++rep.cases;
        try {
            const auto c = lemma3_count(w);
            if (c.upper > 0)
                rep.max_ratio = std::max(rep.max_ratio, static_cast<double>(c.count) / static_cast<double>(c.upper));
            if (w.A2 - w.A1 + 1 == w.m && c.count != w.B2 - w.B1 + 1)
                rep.fail("full-window identity m=" + std::to_string(w.m));
        } catch (const BoundViolation &) {
            rep.fail(detail::fmt_case({{"m", std::to_string(w.m)}, {"A1", std::to_string(w.A1)},
                                       {"A2", std::to_string(w.A2)}, {"B1", std::to_string(w.B1)},
                                       {"B2", std::to_string(w.B2)}}));
        }
    };

    for (i64 m = 1; m <= p.m_max; ++m)
        for (i64 A1 = -m; A1 < m; ++A1)
            for (i64 len = 1; len <= 2 * m + 1; ++len)
                for (i64 B1 : {-m, i64{1}})
                    for (i64 blen : {i64{1}, m, 2 * m + 3}) run({A1, A1 + len - 1, B1, B1 + blen - 1, m});

    std::mt19937_64 rng(p.seed);
    std::uniform_int_distribution<i64> pick_m(1, p.m_random_max), pick_off(-1000, 1000), pick_len(1, 600);
    for (u64 t = 0; t < p.trials; ++t) {
        const i64 m = pick_m(rng);
        const i64 A1 = pick_off(rng), B1 = pick_off(rng);
        run({A1, A1 + pick_len(rng) - 1, B1, B1 + pick_len(rng) - 1, m});
    }
    return rep;
}

struct KernelParams {
    std::uint64_t seed = 1;
    u64 trials = 200;
    i64 n_max = 1000;
    i64 D_max = 100'000;
};

/// Closed form against direct summation (1e-9 relative), and |K| <= 2n/|c|.
inline CheckReport check_kernel(const KernelParams &p) {
    CheckReport rep{"kernel"};
    std::mt19937_64 rng(p.seed);
    std::uniform_int_distribution<i64> pick_n(1, p.n_max), pick_D(0, p.D_max);
    for (u64 t = 0; t < p.trials; ++t) {
        const i64 n = pick_n(rng);
        std::uniform_int_distribution<i64> pick_c(1, 2 * n);
        const i64 c = (rng() & 1) ? pick_c(rng) : -pick_c(rng);
        const i64 D = pick_D(rng);
        ++rep.cases;
        const double closed = kernel_sum(c, n, D);
        const cplx direct = kernel_sum_direct(c, n, D);
        const double err = std::abs(cplx(closed, 0.0) - direct);
        const double scale = std::max(1.0, std::abs(direct));
        rep.max_ratio = std::max(rep.max_ratio, std::abs(closed) * std::abs(static_cast<double>(c)) / (2.0 * n));
        const auto tag = detail::fmt_case({{"c", std::to_string(c)}, {"n", std::to_string(n)}, {"D", std::to_string(D)}});
        if (err > 1e-9 * scale) rep.fail("closed form vs direct " + tag + " err=" + detail::num(err));
        if (std::abs(closed) > 2.0 * static_cast<double>(n) / std::abs(static_cast<double>(c)))
            rep.fail("kernel bound 2n/|c| " + tag);
    }
    return rep;
}

/// Moduli of complete sums for gcd(a, m) = 1: sqrt(m), sqrt(2m) or 0 by m mod 4.
inline CheckReport check_complete_gauss(i64 m_max, double tol = 1e-6) {
    CheckReport rep{"gauss-complete"};
    for (i64 m = 1; m <= m_max; ++m) {
        const double md = static_cast<double>(m);
        double expected = 0.0;
        switch (m % 4) {
        case 1: case 3: expected = std::sqrt(md); break;
        case 0: expected = std::sqrt(2.0 * md); break;
        default: expected = 0.0;
        }
        for (i64 a = 1; a <= std::max<i64>(m - 1, 1); ++a) {
            if (gcd64(a, m) != 1) continue;
            ++rep.cases;
            const double got = std::abs(gauss_incomplete({a, m, m}));
            rep.max_ratio = std::max(rep.max_ratio, std::abs(got - expected));
            if (std::abs(got - expected) > tol)
                rep.fail("a=" + std::to_string(a) + " m=" + std::to_string(m) + " |G|=" + detail::num(got));
        }
    }
    return rep;
}

/// The discriminant bounds used by `check identity`.
inline std::vector<i64> identity_d_values(i64 Q) {
    std::vector<i64> ds{0, 1, 2, 5, Q, Q * Q / 2, 5 * Q * Q};
    std::sort(ds.begin(), ds.end());
    ds.erase(std::unique(ds.begin(), ds.end()), ds.end());
    return ds;
}

/// Cross-counter equality, octant decomposition closed forms, saturation
/// and the policy gap for every Q <= Q_max; fixed-discriminant strata for
/// Q <= min(Q_max, 12).
inline CheckReport check_identity(i64 Q_max, unsigned threads = 1) {
    CheckReport rep{"identity"};
    for (i64 Q = 1; Q <= Q_max; ++Q) {
        for (i64 D : identity_d_values(Q)) {
            const auto tag = "Q=" + std::to_string(Q) + " D=" + std::to_string(D);
            const i64 s = std::min(isqrt(D), Q);
            u64 totals[2] = {};
            for (Policy pol : {Policy::DegreeTwoOnly, Policy::AllTriples}) {
                const CountQuery q{Q, D, pol, true, threads};
                const auto brute = count_brute(q).count;
                const auto interval = count_interval(q).count;
                const auto octant = count_octant(q).first.count;
                ++rep.cases;
                if (brute != interval || interval != octant)
                    rep.fail("cross-counter " + tag + " policy=" + (pol == Policy::AllTriples ? "all" : "degree2"));
                totals[pol == Policy::AllTriples] = interval;
            }
            const auto br = octant_breakdown({Q, D, Policy::AllTriples, true, threads});
            if (br.all_triples() != totals[1]) rep.fail("decomposition " + tag);
            if (br.c1 != static_cast<u64>(2 * s * (4 * Q + 1))) rep.fail("c1 closed form " + tag);
            if (totals[1] - totals[0] != static_cast<u64>((2 * s + 1) * (2 * Q + 1))) rep.fail("policy gap " + tag);
            if (D >= 5 * Q * Q && totals[1] != static_cast<u64>((2 * Q + 1) * (2 * Q + 1) * (2 * Q + 1)))
                rep.fail("saturation " + tag);
        }
        if (Q <= 12) {
            const i64 D = Q * Q;
            u64 strata = 0;
            for (i64 t = -D; t <= D; ++t) {
                const auto a = count_fixed_disc(t, Q, FixedDiscStrategy::DivideLoop);
                const auto b = count_fixed_disc(t, Q, FixedDiscStrategy::CongruenceScan);
                if (a != b) rep.fail("fixed-disc strategies t=" + std::to_string(t) + " Q=" + std::to_string(Q));
                strata += a;
            }
            ++rep.cases;
            if (strata != octant_breakdown({Q, D, Policy::AllTriples, true, threads}).n1)
                rep.fail("strata sum vs n1 Q=" + std::to_string(Q));
        }
    }
    return rep;
}

/// gamma2_empirical(H) = 5 for H = 1..H_max with a witness of the form
/// +-(1, +-1, -1).
inline CheckReport check_gamma2(i64 H_max) {
    CheckReport rep{"gamma2"};
    for (i64 H = 1; H <= H_max; ++H) {
        ++rep.cases;
        const auto g = gamma2_empirical(H);
        rep.max_ratio = std::max(rep.max_ratio, static_cast<double>(g.ratio.num) / static_cast<double>(g.ratio.den));
        const auto &w = g.witness;
        const bool witness_ok = height(w) == 1 && w.a * w.c == -1 && (w.b == 1 || w.b == -1);
        if (!(g.ratio == Rational{5, 1}) || !witness_ok) rep.fail("H=" + std::to_string(H));
    }
    return rep;
}

} // namespace disccount
