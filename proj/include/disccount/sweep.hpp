#pragma once

#include <chrono>
#include <cmath>
#include <cstdio>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "disccount/asymptotics.hpp"
#include "disccount/counting.hpp"
#include "disccount/errors.hpp"

namespace disccount {

inline const char *to_string(Policy p) { return p == Policy::AllTriples ? "all" : "degree2"; }

inline const char *to_string(Method m) {
    switch (m) {
    case Method::Brute: return "brute";
    case Method::Interval: return "interval";
    case Method::Octant: return "octant";
    }
    return "?";
}

inline std::optional<Policy> parse_policy(std::string_view s) {
    if (s == "all") return Policy::AllTriples;
    if (s == "degree2") return Policy::DegreeTwoOnly;
    return std::nullopt;
}

inline std::optional<Method> parse_method(std::string_view s) {
    if (s == "brute") return Method::Brute;
    if (s == "interval") return Method::Interval;
    if (s == "octant") return Method::Octant;
    return std::nullopt;
}

enum class DRule { EqualQ, FixedD, VParam };

struct SweepSpec {
    std::vector<i64> q_values{256, 512, 1024, 2048, 4096};
    DRule d_rule = DRule::EqualQ;
    i64 fixed_d = 0;  // FixedD
    double v = 0.25;  // VParam
    Policy policy = Policy::DegreeTwoOnly;
    Method method = Method::Interval;
    bool force = false;
    unsigned threads = 1;
};

/// One row of counting output, compared against the main term.
struct CountRecord {
    i64 Q = 0;
    i64 D = 0;
    Policy policy = Policy::DegreeTwoOnly;
    Method method = Method::Interval;
    u64 count = 0;
    double main_term = 0;
    double abs_dev = 0;
    std::optional<double> rel_dev;        // undefined when the main term is 0
    std::optional<double> reduced_budget; // needs Q >= 3
    std::optional<double> emp_const;
    std::optional<Admissibility> flags;   // needs Q >= 2
    std::chrono::nanoseconds elapsed{0};
};

inline CountRecord make_record(const CountQuery &query, Method method) {
    const auto result = count(query, method);
    CountRecord r;
    r.Q = query.Q;
    r.D = query.D;
    r.policy = query.policy;
    r.method = method;
    r.count = result.count;
    r.elapsed = result.elapsed;
    const double Q = static_cast<double>(query.Q), D = static_cast<double>(query.D);
    r.main_term = main_term(Q, D);
    r.abs_dev = std::abs(static_cast<double>(r.count) - r.main_term);
    if (r.main_term > 0) r.rel_dev = r.abs_dev / r.main_term;
    if (query.Q >= 3) {
        r.reduced_budget = ErrorModel::at(Q, D).reduced();
        r.emp_const = r.abs_dev / *r.reduced_budget;
    }
    if (query.Q >= 2) r.flags = admissible(Q, D);
    return r;
}

inline i64 sweep_d(const SweepSpec &spec, i64 Q) {
    switch (spec.d_rule) {
    case DRule::EqualQ: return Q;
    case DRule::FixedD: return spec.fixed_d;
    case DRule::VParam: return v_to_D(Q, spec.v);
    }
    return Q;
}

inline void validate(const SweepSpec &spec) {
    if (spec.q_values.empty()) throw DomainError("sweep: q_values must be nonempty");
    for (std::size_t i = 0; i < spec.q_values.size(); ++i) {
        if (spec.q_values[i] < 1) throw DomainError("sweep: q_values must be positive");
        if (i > 0 && spec.q_values[i] <= spec.q_values[i - 1])
            throw DomainError("sweep: q_values must be strictly increasing");
    }
    if (spec.d_rule == DRule::FixedD && spec.fixed_d < 0) throw DomainError("sweep: D must be >= 0");
    if (spec.d_rule == DRule::VParam && !(spec.v >= 0)) throw DomainError("sweep: v must be >= 0");
}

inline std::vector<CountRecord> run_sweep(const SweepSpec &spec) {
    validate(spec);
    std::vector<CountRecord> rows;
    rows.reserve(spec.q_values.size());
    for (i64 Q : spec.q_values) {
        const CountQuery query{Q, sweep_d(spec, Q), spec.policy, spec.force, spec.threads};
        rows.push_back(make_record(query, spec.method));
    }
    return rows;
}

inline std::string format_real(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

inline std::string format_opt(const std::optional<double> &x) { return x ? format_real(*x) : std::string(); }

inline constexpr std::string_view kSweepHeader =
    "Q,D,policy,method,count,main_term,abs_dev,rel_dev,reduced_budget,emp_const";

/// CSV with LF line endings; undefined values are empty fields.
inline std::string to_csv(const std::vector<CountRecord> &rows) {
    std::string out(kSweepHeader);
    out += '\n';
    for (const auto &r : rows) {
        out += std::to_string(r.Q) + ',' + std::to_string(r.D) + ',' + to_string(r.policy) + ',' +
               to_string(r.method) + ',' + std::to_string(r.count) + ',' + format_real(r.main_term) + ',' +
               format_real(r.abs_dev) + ',' + format_opt(r.rel_dev) + ',' + format_opt(r.reduced_budget) + ',' +
               format_opt(r.emp_const) + '\n';
    }
    return out;
}

inline nlohmann::json to_json(const CountRecord &r) {
    auto opt = [](const std::optional<double> &x) -> nlohmann::json {
        return x ? nlohmann::json(*x) : nlohmann::json(nullptr);
    };
    nlohmann::json j{{"Q", r.Q},
                     {"D", r.D},
                     {"policy", to_string(r.policy)},
                     {"method", to_string(r.method)},
                     {"count", r.count},
                     {"main_term", r.main_term},
                     {"abs_dev", r.abs_dev},
                     {"rel_dev", opt(r.rel_dev)},
                     {"reduced_budget", opt(r.reduced_budget)},
                     {"emp_const", opt(r.emp_const)}};
    if (r.flags) {
        j["theorem_hypothesis"] = r.flags->theorem_hypothesis;
        j["asymptotic_range"] = r.flags->asymptotic_range;
    }
    return j;
}

inline std::string to_json(const std::vector<CountRecord> &rows) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto &r : rows) arr.push_back(to_json(r));
    return arr.dump(2) + '\n';
}

} // namespace disccount
