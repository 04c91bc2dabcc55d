#pragma once

// Overflow-checked 64-bit integer helpers. All arithmetic in the library that
// combines user-supplied quantities goes through these, so a computation either
// returns the exact value or throws; it never wraps silently.

#include <cstdint>
#include <numeric>

#include "bnwall/errors.hpp"

namespace bnwall {

using i64 = std::int64_t;

inline i64 checked_add(i64 a, i64 b) {
    i64 r;
    if (__builtin_add_overflow(a, b, &r))
        throw consistency_error("integer overflow in addition");
    return r;
}

inline i64 checked_sub(i64 a, i64 b) {
    i64 r;
    if (__builtin_sub_overflow(a, b, &r))
        throw consistency_error("integer overflow in subtraction");
    return r;
}

inline i64 checked_mul(i64 a, i64 b) {
    i64 r;
    if (__builtin_mul_overflow(a, b, &r))
        throw consistency_error("integer overflow in multiplication");
    return r;
}

inline i64 checked_neg(i64 a) {
    return checked_sub(0, a);
}

// Division that must be exact; a nonzero remainder means a parity or
// divisibility argument failed upstream.
inline i64 exact_div(i64 num, i64 den) {
    if (den == 0)
        throw consistency_error("exact_div by zero");
    if (num % den != 0)
        throw consistency_error("exact_div: nonzero remainder");
    return num / den;
}

inline i64 floor_div(i64 num, i64 den) {
    if (den == 0)
        throw consistency_error("floor_div by zero");
    i64 q = num / den;
    if ((num % den != 0) && ((num < 0) != (den < 0))) --q;
    return q;
}

inline i64 ceil_div(i64 num, i64 den) {
    if (den == 0)
        throw consistency_error("ceil_div by zero");
    i64 q = num / den;
    if ((num % den != 0) && ((num < 0) == (den < 0))) ++q;
    return q;
}

// Exact rational with positive denominator, normalized on construction.
// Only small values appear (slope differences), but the fields stay checked.
struct Rational {
    i64 num = 0;
    i64 den = 1;

    Rational() = default;
    Rational(i64 n, i64 d) {
        if (d == 0)
            throw consistency_error("rational with zero denominator");
        if (d < 0) { n = checked_neg(n); d = checked_neg(d); }
        const i64 g = std::gcd(n, d);
        num = (g != 0) ? n / g : n;
        den = (g != 0) ? d / g : d;
    }

    bool operator==(const Rational&) const = default;
    auto operator<=>(const Rational& o) const {
        return checked_mul(num, o.den) <=> checked_mul(o.num, den);
    }
    bool is_zero() const { return num == 0; }
};

} // namespace bnwall
