#pragma once

#include <cmath>
#include <cstdint>
#include <numeric>

namespace disccount {

using i64 = std::int64_t;
using u64 = std::uint64_t;
using i128 = __int128;

/// Floor of x / y for y != 0, rounding toward negative infinity.
constexpr i64 floor_div(i64 x, i64 y) {
    i64 q = x / y;
    if ((x % y != 0) && ((x < 0) != (y < 0))) --q;
    return q;
}

/// Ceiling of x / y for y != 0.
constexpr i64 ceil_div(i64 x, i64 y) {
    i64 q = x / y;
    if ((x % y != 0) && ((x < 0) == (y < 0))) ++q;
    return q;
}

/// Least nonnegative residue of x modulo m (m >= 1).
constexpr i64 mod_floor(i64 x, i64 m) {
    i64 r = x % m;
    return r < 0 ? r + m : r;
}

/// floor(sqrt(x)) for x >= 0, exact for the whole int64 range.
inline i64 isqrt(i64 x) {
    if (x <= 0) return 0;
    auto r = static_cast<i64>(std::sqrt(static_cast<long double>(x)));
    while (static_cast<i128>(r) * r > x) --r;
    while (static_cast<i128>(r + 1) * (r + 1) <= x) ++r;
    return r;
}

/// ceil(sqrt(x)) for x >= 0.
inline i64 isqrt_ceil(i64 x) {
    i64 r = isqrt(x);
    return (static_cast<i128>(r) * r == x) ? r : r + 1;
}

inline u64 uabs(i64 x) {
    return x < 0 ? u64(0) - static_cast<u64>(x) : static_cast<u64>(x);
}

inline i64 gcd64(i64 a, i64 b) {
    return static_cast<i64>(std::gcd(uabs(a), uabs(b)));
}

} // namespace disccount
