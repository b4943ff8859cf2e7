#pragma once

#include <cstdint>
#include <numeric>

#include "quatring/errors.hpp"

namespace quatring {

using i64 = std::int64_t;

// Overflow-checked int64 arithmetic. All quaternion coordinates flow through
// these; an out-of-range intermediate raises OverflowError instead of wrapping.

inline i64 add_ck(i64 a, i64 b) {
    i64 r;
    if (__builtin_add_overflow(a, b, &r)) throw OverflowError("integer addition overflow");
    return r;
}

inline i64 sub_ck(i64 a, i64 b) {
    i64 r;
    if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("integer subtraction overflow");
    return r;
}

inline i64 mul_ck(i64 a, i64 b) {
    i64 r;
    if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer multiplication overflow");
    return r;
}

inline i64 neg_ck(i64 a) { return sub_ck(0, a); }

inline i64 abs_ck(i64 a) { return a < 0 ? neg_ck(a) : a; }

inline i64 gcd_i64(i64 a, i64 b) {
    // std::gcd on the absolute values; abs of INT64_MIN is checked.
    return std::gcd(abs_ck(a), abs_ck(b));
}

inline i64 lcm_ck(i64 a, i64 b) {
    if (a == 0 || b == 0) return 0;
    i64 g = gcd_i64(a, b);
    return mul_ck(a / g, b);
}

// Extended gcd: returns g = gcd(a, b) >= 0 together with x, y such that
// a*x + b*y = g. Deterministic (classic recursion).
struct ExtGcd {
    i64 g, x, y;
};

inline ExtGcd ext_gcd(i64 a, i64 b) {
    if (b == 0) {
        if (a < 0) return {neg_ck(a), -1, 0};
        return {a, 1, 0};
    }
    ExtGcd r = ext_gcd(b, a % b);
    return {r.g, r.y, sub_ck(r.x, mul_ck(a / b, r.y))};
}

// Floored modulus: result in [0, m) for m > 0.
inline i64 mod_floor(i64 a, i64 m) {
    i64 r = a % m;
    return r < 0 ? r + m : r;
}

}  // namespace quatring
