// disc_count: exact counts of integer quadratics with bounded height and
// discriminant, main-term sweeps, and numerical checks of the supporting
// exponential-sum and congruence bounds.
//
// Exit codes: 0 ok, 2 usage, 3 check failed, 4 cost guard exceeded.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>

#include <CLI11.hpp>

#include "disccount/asymptotics.hpp"
#include "disccount/checks.hpp"
#include "disccount/counting.hpp"
#include "disccount/sweep.hpp"

namespace {

using namespace disccount;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitCheckFailed = 3;
constexpr int kExitGuard = 4;

unsigned resolve_threads(int flag) {
    if (flag > 0) return static_cast<unsigned>(flag);
    if (const char *env = std::getenv("DISC_COUNT_THREADS")) {
        const int v = std::atoi(env);
        if (v > 0) return static_cast<unsigned>(v);
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

std::vector<i64> parse_q_list(const std::string &s) {
    std::vector<i64> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        const long long v = std::stoll(item, &used);
        if (used != item.size()) throw DomainError("bad --q-values entry: " + item);
        out.push_back(v);
    }
    return out;
}

void print_record(const CountRecord &r, const std::string &format) {
    if (format == "json") {
        std::cout << to_json(r).dump(2) << '\n';
        return;
    }
    std::cout << "Q=" << r.Q << '\n'
              << "D=" << r.D << '\n'
              << "policy=" << to_string(r.policy) << '\n'
              << "method=" << to_string(r.method) << '\n'
              << "count=" << r.count << '\n'
              << "main_term=" << format_real(r.main_term) << '\n'
              << "abs_dev=" << format_real(r.abs_dev) << '\n'
              << "rel_dev=" << format_opt(r.rel_dev) << '\n'
              << "reduced_budget=" << format_opt(r.reduced_budget) << '\n'
              << "emp_const=" << format_opt(r.emp_const) << '\n';
    if (r.flags)
        std::cout << "theorem_hypothesis=" << (r.flags->theorem_hypothesis ? "true" : "false") << '\n'
                  << "asymptotic_range=" << (r.flags->asymptotic_range ? "true" : "false") << '\n';
}

int report_check(const CheckReport &rep) {
    std::cout << "target=" << rep.target << '\n'
              << "cases=" << rep.cases << '\n'
              << "max_ratio=" << format_real(rep.max_ratio) << '\n'
              << "violations=" << rep.violations << '\n';
    for (const auto &n : rep.notes) std::cout << n << '\n';
    std::cout << (rep.ok() ? "result=ok" : "result=FAILED") << '\n';
    return rep.ok() ? kExitOk : kExitCheckFailed;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Exact counting of integer quadratics by height and discriminant"};
    app.require_subcommand(1);
    app.fallthrough();
    int threads_flag = 0;
    app.add_option("--threads", threads_flag, "Worker threads (fallback: DISC_COUNT_THREADS)")->check(CLI::NonNegativeNumber);

    // count
    auto *count_cmd = app.add_subcommand("count", "Count quadratics with H <= Q and |disc| <= D");
    i64 Q = 1, D = 0;
    std::string policy_name = "degree2", method_name = "interval", format = "text";
    bool force = false;
    count_cmd->add_option("--Q", Q, "Height bound")->required()->check(CLI::PositiveNumber);
    count_cmd->add_option("--D", D, "Discriminant bound")->required()->check(CLI::NonNegativeNumber);
    count_cmd->add_option("--policy", policy_name, "degree2 | all")->check(CLI::IsMember({"degree2", "all"}));
    count_cmd->add_option("--method", method_name, "brute | interval | octant")
        ->check(CLI::IsMember({"brute", "interval", "octant"}));
    count_cmd->add_option("--format", format, "text | json")->check(CLI::IsMember({"text", "json"}));
    count_cmd->add_flag("--force", force, "Bypass cost guards");

    // sweep
    auto *sweep_cmd = app.add_subcommand("sweep", "Count over a list of Q and compare with the main term");
    std::string q_values = "256,512,1024,2048,4096", d_rule = "equal", output, sweep_format = "csv";
    i64 fixed_d = 0;
    double v = 0.25;
    std::string sweep_policy = "degree2", sweep_method = "interval";
    bool sweep_force = false;
    sweep_cmd->add_option("--q-values", q_values, "Comma-separated, strictly increasing");
    sweep_cmd->add_option("--d-rule", d_rule, "equal | fixed | vparam")->check(CLI::IsMember({"equal", "fixed", "vparam"}));
    sweep_cmd->add_option("--D", fixed_d, "D for --d-rule fixed")->check(CLI::NonNegativeNumber);
    sweep_cmd->add_option("--v", v, "v for --d-rule vparam, D = floor(5 Q^(2-2v))")->check(CLI::NonNegativeNumber);
    sweep_cmd->add_option("--policy", sweep_policy)->check(CLI::IsMember({"degree2", "all"}));
    sweep_cmd->add_option("--method", sweep_method)->check(CLI::IsMember({"brute", "interval", "octant"}));
    sweep_cmd->add_option("--output", output, "Output file (default stdout)");
    sweep_cmd->add_option("--format", sweep_format, "csv | json")->check(CLI::IsMember({"csv", "json"}));
    sweep_cmd->add_flag("--force", sweep_force, "Bypass cost guards");

    // check
    auto *check_cmd = app.add_subcommand("check", "Numerical checks of lemmas and identities");
    std::string target;
    std::uint64_t seed = 1;
    u64 trials = 0;
    i64 m_min = 2, m_max = 0, q_max = 30, h_max = 10;
    check_cmd->add_option("target", target, "lemma1 | lemma2 | lemma3 | kernel | identity | gamma2")
        ->required()
        ->check(CLI::IsMember({"lemma1", "lemma2", "lemma3", "kernel", "identity", "gamma2"}));
    check_cmd->add_option("--seed", seed, "Seed for randomized checks");
    check_cmd->add_option("--trials", trials, "Randomized cases (0 = target default)");
    check_cmd->add_option("--m-min", m_min, "Smallest modulus (lemma2)")->check(CLI::Range(i64{2}, i64{1} << 40));
    check_cmd->add_option("--m-max", m_max, "Largest modulus (lemma2, lemma3)")->check(CLI::NonNegativeNumber);
    check_cmd->add_option("--Q-max", q_max, "Largest Q (identity)")->check(CLI::PositiveNumber);
    check_cmd->add_option("--H-max", h_max, "Largest height (gamma2)")->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    const unsigned threads = resolve_threads(threads_flag);
    try {
        if (*count_cmd) {
            const CountQuery query{Q, D, *parse_policy(policy_name), force, threads};
            const auto rec = make_record(query, *parse_method(method_name));
            std::cerr << "elapsed_ms=" << rec.elapsed.count() / 1e6 << '\n';
            print_record(rec, format);
            return kExitOk;
        }
        if (*sweep_cmd) {
            SweepSpec spec;
            spec.q_values = parse_q_list(q_values);
            spec.d_rule = d_rule == "equal" ? DRule::EqualQ : d_rule == "fixed" ? DRule::FixedD : DRule::VParam;
            spec.fixed_d = fixed_d;
            spec.v = v;
            spec.policy = *parse_policy(sweep_policy);
            spec.method = *parse_method(sweep_method);
            spec.force = sweep_force;
            spec.threads = threads;
            const auto rows = run_sweep(spec);
            for (const auto &r : rows) std::cerr << "Q=" << r.Q << " elapsed_ms=" << r.elapsed.count() / 1e6 << '\n';
            const std::string body = sweep_format == "csv" ? to_csv(rows) : to_json(rows);
            if (output.empty()) {
                std::cout << body;
            } else {
                std::ofstream out(output, std::ios::binary);
                if (!out) throw DomainError("cannot open output file " + output);
                out << body;
            }
            return kExitOk;
        }
        if (*check_cmd) {
            if (target == "lemma1") {
                Lemma1Params p;
                p.seed = seed;
                if (trials) p.trials = trials;
                return report_check(check_lemma1(p));
            }
            if (target == "lemma2") {
                const i64 hi = m_max ? m_max : 500;
                const auto sampling = trials ? Lemma2Sampling::Random(seed, trials) : Lemma2Sampling::Exhaustive();
                return report_check(check_lemma2(m_min, hi, sampling, threads));
            }
            if (target == "lemma3") {
                Lemma3Params p;
                p.seed = seed;
                if (m_max) p.m_max = m_max;
                if (trials) p.trials = trials;
                return report_check(check_lemma3(p));
            }
            if (target == "kernel") {
                KernelParams p;
                p.seed = seed;
                if (trials) p.trials = trials;
                return report_check(check_kernel(p));
            }
            if (target == "identity") return report_check(check_identity(q_max, threads));
            if (target == "gamma2") return report_check(check_gamma2(h_max));
        }
    } catch (const GuardExceeded &e) {
        std::cerr << "error: " << e.what() << " (use --force)\n";
        return kExitGuard;
    } catch (const DomainError &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::logic_error &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const Error &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitCheckFailed;
    }
    return kExitUsage;
}
