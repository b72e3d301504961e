#pragma once

#include <algorithm>
#include <tuple>

#include "disccount/errors.hpp"
#include "disccount/intmath.hpp"

namespace disccount {

/// Integer quadratic a x^2 + b x + c. The zero triple is representable.
struct QuadPoly {
    i64 a = 0;
    i64 b = 0;
    i64 c = 0;

    constexpr bool is_degree_two() const { return a != 0; }

    friend constexpr bool operator==(const QuadPoly &, const QuadPoly &) = default;
};

/// b^2 - 4ac, computed in 128-bit arithmetic. Throws ArithmeticOverflow
/// if even the 128-bit range is exceeded.
inline i128 discriminant(const QuadPoly &p) {
    i128 bb, ac, four_ac, d;
    if (__builtin_mul_overflow(static_cast<i128>(p.b), static_cast<i128>(p.b), &bb) ||
        __builtin_mul_overflow(static_cast<i128>(p.a), static_cast<i128>(p.c), &ac) ||
        __builtin_mul_overflow(ac, static_cast<i128>(4), &four_ac) ||
        __builtin_sub_overflow(bb, four_ac, &d)) {
        throw ArithmeticOverflow("discriminant: 128-bit range exceeded");
    }
    return d;
}

inline u64 height(const QuadPoly &p) {
    return std::max({uabs(p.a), uabs(p.b), uabs(p.c)});
}

/// Nonnegative rational num/den in lowest terms.
struct Rational {
    i64 num = 0;
    i64 den = 1;

    friend constexpr bool operator==(const Rational &, const Rational &) = default;
};

struct Gamma2Result {
    Rational ratio;
    QuadPoly witness;
};

/// Maximum of |disc(p)| / height(p)^2 over all degree-two p with
/// 1 <= height(p) <= H, by exhaustive scan. The witness is the maximiser of
/// least height; among those, the one with a > 0, b > 0 is preferred.
inline Gamma2Result gamma2_empirical(i64 H) {
    if (H < 1) throw DomainError("gamma2_empirical: H must be >= 1");
    if (H > 1000) throw GuardExceeded("gamma2_empirical: H > 1000");

    Gamma2Result best{{0, 1}, {}};
    u64 best_h = 0;
    auto key = [](const QuadPoly &p, u64 h) { return std::tuple(h, -p.a, -p.b, p.c); };

    for (i64 a = -H; a <= H; ++a) {
        if (a == 0) continue;
        for (i64 b = -H; b <= H; ++b) {
            for (i64 c = -H; c <= H; ++c) {
                const QuadPoly p{a, b, c};
                const u64 h = height(p);
                const i128 d = discriminant(p);
                const i128 ad = d < 0 ? -d : d;
                // ad / h^2 vs best.num / best.den by cross multiplication
                const i128 lhs = ad * best.ratio.den;
                const i128 rhs = static_cast<i128>(best.ratio.num) * h * h;
                const bool better =
                    lhs > rhs || (lhs == rhs && best_h != 0 && key(p, h) < key(best.witness, best_h));
                if (best_h == 0 || better) {
                    const i64 num = static_cast<i64>(ad);
                    const i64 den = static_cast<i64>(h * h);
                    const i64 g = std::max<i64>(gcd64(num, den), 1);
                    best = {{num / g, den / g}, p};
                    best_h = h;
                }
            }
        }
    }
    return best;
}

} // namespace disccount
