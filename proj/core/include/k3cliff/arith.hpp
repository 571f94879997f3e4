#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>

#include "k3cliff/errors.hpp"

namespace k3cliff {

// All lattice arithmetic runs on checked 64-bit integers; any overflow
// throws ArithmeticOverflow rather than wrapping.
using Int = long long;

inline Int checked_add(Int a, Int b) {
    Int r;
    if (__builtin_add_overflow(a, b, &r)) throw ArithmeticOverflow("add");
    return r;
}

inline Int checked_sub(Int a, Int b) {
    Int r;
    if (__builtin_sub_overflow(a, b, &r)) throw ArithmeticOverflow("sub");
    return r;
}

inline Int checked_mul(Int a, Int b) {
    Int r;
    if (__builtin_mul_overflow(a, b, &r)) throw ArithmeticOverflow("mul");
    return r;
}

// Floor/ceil division, divisor must be positive.
inline Int floor_div(Int a, Int b) {
    Int q = a / b;
    if (a % b != 0 && ((a < 0) != (b < 0))) --q;
    return q;
}

inline Int ceil_div(Int a, Int b) {
    Int q = a / b;
    if (a % b != 0 && ((a < 0) == (b < 0))) ++q;
    return q;
}

// Exact integer square root test: t with t*t == x, or nullopt.
std::optional<Int> perfect_square_root(Int x);

// Exact rational with normalized sign and gcd; denominator always > 0.
struct Rational {
    Int num{0};
    Int den{1};

    Rational() = default;
    Rational(Int n) : num(n), den(1) {}  // NOLINT: implicit by intent
    Rational(Int n, Int d);

    friend bool operator==(const Rational&, const Rational&) = default;
    std::strong_ordering operator<=>(const Rational& other) const;

    Rational operator+(const Rational& other) const;
    Rational operator-(const Rational& other) const;

    std::string str() const;
    static Rational parse(const std::string& text);
};

}  // namespace k3cliff
