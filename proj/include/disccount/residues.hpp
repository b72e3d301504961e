#pragma once

#include <span>
#include <vector>

#include "disccount/errors.hpp"
#include "disccount/intmath.hpp"

namespace disccount {

inline constexpr i64 kSquareRootScanCap = 10'000'000;
inline constexpr i64 kWindowCostCap = 100'000'000;

/// All r in [0, m) with r^2 = t (mod m), ascending, by direct scan.
inline std::vector<i64> square_roots_mod(i64 t, i64 m) {
    if (m < 1) throw DomainError("square_roots_mod: m must be >= 1");
    if (m > kSquareRootScanCap) throw GuardExceeded("square_roots_mod: m > 1e7");
    const i64 target = mod_floor(t, m);
    std::vector<i64> roots;
    for (i64 r = 0; r < m; ++r)
        if ((r * r) % m == target) roots.push_back(r);
    return roots;
}

/// Number of integers in [lo, hi] congruent mod m to one of `roots`.
/// Roots must be distinct residues in [0, m).
inline i64 count_in_class(std::span<const i64> roots, i64 m, i64 lo, i64 hi) {
    if (m < 1) throw DomainError("count_in_class: m must be >= 1");
    i64 total = 0;
    for (i64 r : roots) {
        const i64 k = floor_div(hi - r, m) - ceil_div(lo - r, m) + 1;
        if (k > 0) total += k;
    }
    return total;
}

struct ResidueWindow {
    i64 A1 = 0, A2 = 0;
    i64 B1 = 0, B2 = 0;
    i64 m = 1;
};

struct WindowCount {
    i64 count = 0;
    i64 upper = 0;
    i64 lower = 0;
};

/// Pairs (a, q) with a in [A1, A2], q in [B1, B2], q^2 = a (mod m), together
/// with the sandwich floor(L/m)(B2-B1+1) <= count <= ceil(L/m)(B2-B1+1),
/// L = A2-A1+1. Throws BoundViolation if the sandwich fails.
inline WindowCount lemma3_count(const ResidueWindow &w) {
    if (w.m < 1 || w.A1 > w.A2 || w.B1 > w.B2)
        throw DomainError("lemma3_count: malformed window");
    const i64 qlen = w.B2 - w.B1 + 1;
    if (static_cast<i128>(qlen) * w.m > kWindowCostCap)
        throw GuardExceeded("lemma3_count: (B2-B1+1)*m > 1e8");

    WindowCount out;
    for (i64 q = w.B1; q <= w.B2; ++q) {
        const i64 qr = mod_floor(q, w.m);
        const i64 s = (qr * qr) % w.m;
        out.count += count_in_class(std::span<const i64>(&s, 1), w.m, w.A1, w.A2);
    }
    const i64 alen = w.A2 - w.A1 + 1;
    out.upper = ceil_div(alen, w.m) * qlen;
    out.lower = floor_div(alen, w.m) * qlen;
    if (out.count < out.lower || out.count > out.upper)
        throw BoundViolation("lemma3_count: residue window sandwich violated");
    return out;
}

} // namespace disccount
