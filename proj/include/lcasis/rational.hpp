#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace lcasis {

/// Exact rational arithmetic for Haar weights. The normalization constraints
/// are solvable in small integers, so weights stay exact until they cross a
/// numerical boundary.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Rational() = default;
  Rational(std::int64_t n, std::int64_t d = 1) : num(n), den(d) {
    if (den == 0) throw std::invalid_argument("Rational: zero denominator");
    normalize();
  }

  double to_double() const {
    return static_cast<double>(num) / static_cast<double>(den);
  }

  std::string to_string() const {
    return den == 1 ? std::to_string(num)
                    : std::to_string(num) + "/" + std::to_string(den);
  }

  friend Rational operator*(const Rational& a, const Rational& b) {
    return Rational(a.num * b.num, a.den * b.den);
  }
  friend Rational operator*(const Rational& a, std::int64_t k) {
    return Rational(a.num * k, a.den);
  }
  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num == b.num && a.den == b.den;
  }
  friend bool operator!=(const Rational& a, const Rational& b) {
    return !(a == b);
  }

 private:
  void normalize() {
    if (den < 0) {
      num = -num;
      den = -den;
    }
    const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
    if (num == 0) den = 1;
  }
};

}  // namespace lcasis
