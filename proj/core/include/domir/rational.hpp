#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace domir {

/// Exact fraction num/den, always normalised (den > 0, gcd 1).
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  constexpr Rational() = default;
  constexpr Rational(std::int64_t n, std::int64_t d = 1) : num(n), den(d) {
    if (den == 0) throw std::invalid_argument("Rational: zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }

  double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
  long double to_long_double() const { return static_cast<long double>(num) / static_cast<long double>(den); }

  /// floor(this * k) for k >= 0.
  std::int64_t floor_times(std::int64_t k) const {
    const std::int64_t p = num * k;
    return p >= 0 ? p / den : -((-p + den - 1) / den);
  }

  friend constexpr Rational operator+(Rational a, Rational b) { return {a.num * b.den + b.num * a.den, a.den * b.den}; }
  friend constexpr Rational operator-(Rational a, Rational b) { return {a.num * b.den - b.num * a.den, a.den * b.den}; }
  friend constexpr Rational operator*(Rational a, Rational b) { return {a.num * b.num, a.den * b.den}; }
  friend constexpr Rational operator/(Rational a, Rational b) { return {a.num * b.den, a.den * b.num}; }
  friend constexpr bool operator==(Rational a, Rational b) { return a.num == b.num && a.den == b.den; }
  friend constexpr bool operator<(Rational a, Rational b) { return a.num * b.den < b.num * a.den; }
  friend constexpr bool operator<=(Rational a, Rational b) { return !(b < a); }
  friend constexpr bool operator>(Rational a, Rational b) { return b < a; }
  friend constexpr bool operator>=(Rational a, Rational b) { return !(a < b); }

  std::string str() const { return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den); }
};

/// Parses "p/q", an integer, or a plain decimal such as "0.25" exactly.
Rational parse_rational(const std::string& text);

}  // namespace domir
