#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace fourfold {

// All exact arithmetic in this library runs on 64-bit integers with
// explicit overflow detection. Coefficients stay small, but elimination
// intermediates (Smith reduction, fraction-free determinants) can grow,
// so every add/sub/mul that feeds them goes through these helpers.
using Int = std::int64_t;

[[noreturn]] inline void throw_overflow(const char* op) {
    throw std::overflow_error(std::string("integer overflow in ") + op);
}

inline Int checked_add(Int a, Int b) {
    Int r;
    if (__builtin_add_overflow(a, b, &r)) throw_overflow("addition");
    return r;
}

inline Int checked_sub(Int a, Int b) {
    Int r;
    if (__builtin_sub_overflow(a, b, &r)) throw_overflow("subtraction");
    return r;
}

inline Int checked_mul(Int a, Int b) {
    Int r;
    if (__builtin_mul_overflow(a, b, &r)) throw_overflow("multiplication");
    return r;
}

inline Int checked_neg(Int a) {
    return checked_sub(0, a);
}

inline Int checked_abs(Int a) {
    return a < 0 ? checked_neg(a) : a;
}

// gcd of absolute values; gcd(0, 0) = 0.
inline Int gcd_abs(Int a, Int b) {
    return std::gcd(checked_abs(a), checked_abs(b));
}

}  // namespace fourfold
