#include "k3cliff/arith.hpp"

#include <cmath>
#include <cstdlib>

namespace k3cliff {

std::optional<Int> perfect_square_root(Int x) {
    if (x < 0) return std::nullopt;
    Int t = static_cast<Int>(std::sqrt(static_cast<double>(x)));
    while (t > 0 && t * t > x) --t;
    while ((t + 1) * (t + 1) <= x) ++t;
    if (t * t == x) return t;
    return std::nullopt;
}

Rational::Rational(Int n, Int d) {
    if (d == 0) throw Error("rational with zero denominator");
    if (d < 0) {
        n = checked_sub(0, n);
        d = checked_sub(0, d);
    }
    Int g = std::gcd(n, d);
    if (g == 0) g = 1;
    num = n / g;
    den = d / g;
}

std::strong_ordering Rational::operator<=>(const Rational& other) const {
    // Denominators are positive, cross-multiply in 128 bits.
    __int128 lhs = static_cast<__int128>(num) * other.den;
    __int128 rhs = static_cast<__int128>(other.num) * den;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

Rational Rational::operator+(const Rational& other) const {
    return Rational(checked_add(checked_mul(num, other.den), checked_mul(other.num, den)),
                    checked_mul(den, other.den));
}

Rational Rational::operator-(const Rational& other) const {
    return Rational(checked_sub(checked_mul(num, other.den), checked_mul(other.num, den)),
                    checked_mul(den, other.den));
}

std::string Rational::str() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
}

Rational Rational::parse(const std::string& text) {
    auto slash = text.find('/');
    if (slash == std::string::npos) return Rational(std::stoll(text));
    return Rational(std::stoll(text.substr(0, slash)), std::stoll(text.substr(slash + 1)));
}

}  // namespace k3cliff
