// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fail.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "disccount/asymptotics.hpp"
#include "disccount/checks.hpp"
#include "disccount/counting.hpp"
#include "disccount/sweep.hpp"

using namespace disccount;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

struct Criterion {
    int id;
    const char *name;
    double time_limit_s; // 0 = none stated
    std::function<Outcome()> run;
};

constexpr auto kAll = Policy::AllTriples;
constexpr auto kDeg2 = Policy::DegreeTwoOnly;

Outcome oracle_equivalence() {
    u64 cases = 0;
    for (i64 Q = 1; Q <= 30; ++Q)
        for (i64 D : {i64{0}, i64{1}, i64{2}, i64{5}, Q, Q * Q / 2, 5 * Q * Q})
            for (Policy pol : {kAll, kDeg2}) {
                const CountQuery q{Q, D, pol};
                const auto b = count_brute(q).count, i = count_interval(q).count, o = count_octant(q).first.count;
                ++cases;
                if (b != i || i != o)
                    return {false, "Q=" + std::to_string(Q) + " D=" + std::to_string(D) + " brute=" +
                                       std::to_string(b) + " interval=" + std::to_string(i) +
                                       " octant=" + std::to_string(o)};
            }
    return {true, std::to_string(cases) + " (Q,D,policy) cases agree"};
}

Outcome decomposition_identity() {
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<i64> pick_Q(1, 200);
    for (int t = 0; t < 100; ++t) {
        const i64 Q = pick_Q(rng);
        const i64 D = std::uniform_int_distribution<i64>(0, 5 * Q * Q)(rng);
        const auto br = octant_breakdown({Q, D, kAll});
        const u64 reference = Q <= 60 ? count_brute({Q, D, kAll}).count : count_interval({Q, D, kAll}).count;
        if (br.c0 + br.c1 + 4 * br.n1 + 4 * br.n2 != reference)
            return {false, "Q=" + std::to_string(Q) + " D=" + std::to_string(D)};
    }
    return {true, "100 random pairs, Q <= 200, D <= 5Q^2"};
}

Outcome saturation() {
    for (i64 Q = 1; Q <= 50; ++Q) {
        const u64 cube = static_cast<u64>((2 * Q + 1) * (2 * Q + 1) * (2 * Q + 1));
        if (count_interval({Q, 5 * Q * Q, kAll}).count != cube || count_octant({Q, 5 * Q * Q, kAll}).first.count != cube)
            return {false, "Q=" + std::to_string(Q)};
    }
    return {true, "N(Q, 5Q^2) = (2Q+1)^3 for Q = 1..50"};
}

Outcome small_values() {
    const auto all = count_brute({1, 1, kAll}).count;
    const auto deg2 = count_brute({1, 1, kDeg2}).count;
    return {all == 15 && deg2 == 6, "N(1,1) all=" + std::to_string(all) + " degree2=" + std::to_string(deg2)};
}

Outcome convergence() {
    SweepSpec spec; // D = Q, Q = 256..4096
    const auto rows = run_sweep(spec);
    double lo = INFINITY, hi = 0;
    std::string detail;
    for (const auto &r : rows) {
        lo = std::min(lo, *r.emp_const);
        hi = std::max(hi, *r.emp_const);
        char buf[96];
        std::snprintf(buf, sizeof buf, " Q=%lld rel_dev=%.4g emp=%.4g", static_cast<long long>(r.Q), *r.rel_dev,
                      *r.emp_const);
        detail += buf;
    }
    const double first = *rows.front().rel_dev, last = *rows.back().rel_dev;
    const bool ok = last < first && last <= 0.25 && hi <= 10 * lo;
    char buf[64];
    std::snprintf(buf, sizeof buf, " | emp spread=%.3g", hi / lo);
    return {ok, detail + buf};
}

Outcome parity_and_strata() {
    for (i64 t = -100; t <= 100; ++t) {
        const i64 r = mod_floor(t, 4);
        if (r != 2 && r != 3) continue;
        for (auto s : {FixedDiscStrategy::DivideLoop, FixedDiscStrategy::CongruenceScan})
            if (count_fixed_disc(t, 100, s) != 0) return {false, "nonzero at t=" + std::to_string(t)};
    }
    const i64 Q = 20, D = 400;
    u64 div = 0, cong = 0;
    for (i64 t = -D; t <= D; ++t) {
        div += count_fixed_disc(t, Q, FixedDiscStrategy::DivideLoop);
        cong += count_fixed_disc(t, Q, FixedDiscStrategy::CongruenceScan);
    }
    const u64 n1 = octant_breakdown({Q, D, kAll}).n1;
    return {div == n1 && cong == n1, "sum N1(t) = " + std::to_string(div) + "/" + std::to_string(cong) +
                                         ", n1 = " + std::to_string(n1)};
}

std::string summarize(const CheckReport &r) {
    char buf[128];
    std::snprintf(buf, sizeof buf, "%llu cases, %llu violations, max ratio %.6g",
                  static_cast<unsigned long long>(r.cases), static_cast<unsigned long long>(r.violations), r.max_ratio);
    return buf;
}

Outcome lemma2() {
    const auto r = check_lemma2(2, 500, Lemma2Sampling::Exhaustive());
    return {r.ok(), summarize(r)};
}

Outcome lemma1() {
    const auto r = check_lemma1({.seed = 1, .trials = 10'000, .q_max = 50, .P_max = 1000, .U_max = 1000.0});
    return {r.ok() && r.cases == 10'000, summarize(r)};
}

Outcome lemma3() {
    u64 checked = 0;
    for (i64 m = 1; m <= 200; ++m)
        for (i64 A1 : {i64{-m}, i64{0}, i64{7}}) {
            ++checked;
            if (lemma3_count({A1, A1 + m - 1, -3, 97, m}).count != 101)
                return {false, "full-window identity m=" + std::to_string(m)};
        }
    Lemma3Params p;
    p.m_max = 0; // random windows only
    p.trials = 10'000;
    p.m_random_max = 200;
    p.seed = 1;
    const auto r = check_lemma3(p);
    return {r.ok() && r.cases == 10'000, summarize(r) + "; full-window identity on " + std::to_string(checked)};
}

Outcome kernel() {
    const auto r = check_kernel({.seed = 1, .trials = 200, .n_max = 1000, .D_max = 100'000});
    return {r.ok() && r.cases == 200, summarize(r)};
}

Outcome complete_gauss() {
    const auto r = check_complete_gauss(500, 1e-6);
    return {r.ok(), summarize(r)};
}

Outcome gamma2() {
    const auto r = check_gamma2(10);
    return {r.ok() && r.cases == 10, summarize(r)};
}

Outcome determinism() {
    for (DRule rule : {DRule::EqualQ, DRule::VParam}) {
        for (Method method : {Method::Interval, Method::Octant}) {
            SweepSpec spec;
            spec.q_values = {256, 512, 1024};
            spec.d_rule = rule;
            spec.method = method;
            spec.threads = 1;
            const auto one = to_csv(run_sweep(spec));
            spec.threads = 8;
            const auto eight = to_csv(run_sweep(spec));
            if (one != eight) return {false, std::string("rule differs for method ") + to_string(method)};
        }
    }
    return {true, "threads 1 vs 8 byte-identical (EqualQ, VParam x interval, octant)"};
}

} // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "oracle equivalence", 30, oracle_equivalence},
        {2, "decomposition identity", 60, decomposition_identity},
        {3, "saturation", 0, saturation},
        {4, "hand-verified small values", 0, small_values},
        {5, "asymptotic convergence", 120, convergence},
        {6, "parity vanishing and strata", 0, parity_and_strata},
        {7, "lemma 2 scan", 120, lemma2},
        {8, "lemma 1 property", 0, lemma1},
        {9, "lemma 3 property", 0, lemma3},
        {10, "kernel sum", 0, kernel},
        {11, "complete gauss sum moduli", 0, complete_gauss},
        {12, "gamma2", 0, gamma2},
        {13, "determinism", 0, determinism},
    };

    int failed = 0;
    for (const auto &c : criteria) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome out;
        try {
            out = c.run();
        } catch (const std::exception &e) {
            out = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (c.time_limit_s > 0 && secs >= c.time_limit_s) {
            out.pass = false;
            out.detail += " (over time limit)";
        }
        std::printf("[%s] AC%-2d %-28s %7.2fs  %s\n", out.pass ? "PASS" : "FAIL", c.id, c.name, secs,
                    out.detail.c_str());
        std::fflush(stdout);
        failed += !out.pass;
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
