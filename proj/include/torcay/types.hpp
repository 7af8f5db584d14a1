#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace torcay {

using Int = std::int64_t;
using Vec2 = Eigen::Matrix<Int, 2, 1>;
using Mat2 = Eigen::Matrix<Int, 2, 2>;

inline constexpr double pi = std::numbers::pi_v<double>;
inline constexpr double two_pi = 2.0 * std::numbers::pi_v<double>;

inline bool eq(const Vec2& a, const Vec2& b) { return (a.array() == b.array()).all(); }
inline bool eq(const Mat2& a, const Mat2& b) { return (a.array() == b.array()).all(); }

inline Int det(const Mat2& m) { return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0); }

/// Reduced fraction in [0, 1); all arithmetic is mod 1. Exact angle bookkeeping
/// for lattice characters, so equality and zero tests never go through floats.
struct Rational {
  Int num = 0;
  Int den = 1;

  Rational() = default;
  Rational(Int n, Int d) { *this = mod1(n, d); }

  static Rational mod1(Int n, Int d) {
    if (d == 0) throw std::invalid_argument("Rational: zero denominator");
    if (d < 0) {
      n = -n;
      d = -d;
    }
    n %= d;
    if (n < 0) n += d;
    const Int g = std::gcd(n, d);
    Rational r;
    r.num = n / g;
    r.den = d / g;
    return r;
  }

  bool zero() const { return num == 0; }
  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  /// Angle 2*pi*num/den in [0, 2*pi).
  double angle() const { return two_pi * static_cast<double>(num) / static_cast<double>(den); }

  Rational negated() const { return mod1(-num, den); }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return mod1(a.num * b.den + b.num * a.den, a.den * b.den);
  }
  friend Rational operator*(const Rational& a, Int k) { return mod1(a.num * k, a.den); }
  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num == b.num && a.den == b.den;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
};

}  // namespace torcay
