#pragma once

#include <cmath>
#include <numbers>

#include "disccount/counting.hpp"
#include "disccount/errors.hpp"
#include "disccount/intmath.hpp"

namespace disccount {

/// Main-term constant 4 (ln 2 + 1) = 6.772588...
inline constexpr double kappa() { return 4.0 * (std::numbers::ln2 + 1.0); }

inline double main_term(double Q, double D) { return kappa() * Q * D; }

/// The five error terms of the main-term approximation.
struct ErrorModel {
    double d1 = 0; // D^2 / Q
    double d2 = 0; // D sqrt(Q)
    double d3 = 0; // (Q ln Q)^{3/2}
    double d4 = 0; // Q sqrt(D)
    double d5 = 0; // D^{3/2} ln Q

    static ErrorModel at(double Q, double D) {
        const double lq = std::log(Q);
        return {D * D / Q, D * std::sqrt(Q), std::pow(Q * lq, 1.5), Q * std::sqrt(D), std::pow(D, 1.5) * lq};
    }

    double full() const { return d1 + d2 + d3 + d4 + d5; }
    double reduced() const { return d3 + d5; }
};

struct ErrorBudget {
    double full = 0;
    double reduced = 0;
};

/// Sum of all five terms and the dominant pair d3 + d5. For D <= 5Q^2
/// the full sum never exceeds 5.1 times the reduced one.
inline ErrorBudget error_budget(double Q, double D) {
    if (!(Q >= 3)) throw DomainError("error_budget: Q must be >= 3");
    if (!(D >= 0)) throw DomainError("error_budget: D must be >= 0");
    const auto e = ErrorModel::at(Q, D);
    const ErrorBudget out{e.full(), e.reduced()};
    if (D <= 5 * Q * Q && out.full > 5.1 * out.reduced)
        throw BoundViolation("error_budget: full budget exceeds 5.1 x reduced");
    return out;
}

struct Admissibility {
    bool theorem_hypothesis = false; // 1 <= D <= Q^2/2
    bool asymptotic_range = false;   // sqrt(Q) (ln Q)^{3/2} <= D <= (Q / ln Q)^2, constants 1
};

inline Admissibility admissible(double Q, double D) {
    if (!(Q >= 2)) throw DomainError("admissible: Q must be >= 2");
    const double lq = std::log(Q);
    const double lower = std::sqrt(Q) * std::pow(lq, 1.5);
    const double upper = (Q / lq) * (Q / lq);
    return {1 <= D && D <= Q * Q / 2, lower <= D && D <= upper};
}

/// floor(5 Q^{2-2v}). Values within 1e-9 relative of an integer are
/// snapped to it so exact powers are not lost to rounding.
inline i64 v_to_D(i64 Q, double v) {
    if (Q < 1 || !(v >= 0)) throw DomainError("v_to_D: need Q >= 1, v >= 0");
    if (v == 0) return 5 * Q * Q;
    const long double x = 5.0L * std::pow(static_cast<long double>(Q), 2.0L - 2.0L * static_cast<long double>(v));
    const long double nearest = std::round(x);
    if (std::abs(x - nearest) <= 1e-9L * std::max(1.0L, x)) return static_cast<i64>(nearest);
    return static_cast<i64>(std::floor(x));
}

/// #{degree-two p : H(p) <= Q, |disc p| <= 5 Q^{2-2v}} / Q^{3-2v}.
inline double lower_bound_ratio(i64 Q, double v, Policy policy = Policy::DegreeTwoOnly, unsigned threads = 1) {
    if (!(v > 0 && v < 0.5)) throw DomainError("lower_bound_ratio: need 0 < v < 1/2");
    const CountQuery query{Q, v_to_D(Q, v), policy, false, threads};
    const auto n = count_interval(query).count;
    return static_cast<double>(n) / std::pow(static_cast<double>(Q), 3.0 - 2.0 * v);
}

} // namespace disccount
