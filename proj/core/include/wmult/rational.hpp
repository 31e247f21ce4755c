#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace wmult {

// Exact rational arithmetic on 64-bit integers, always normalized
// (denominator > 0, gcd(|num|, den) == 1). Products and sums pass through
// __int128 before renormalizing; the denominators appearing in root-system
// arithmetic divide 6, so this never overflows at the scales used here.
class Rational {
 public:
  Rational() = default;
  Rational(long long n) : num_(n) {}
  Rational(long long n, long long d) : num_(n), den_(d) {
    if (d == 0) throw std::invalid_argument("Rational: zero denominator");
    normalize();
  }

  long long num() const { return num_; }
  long long den() const { return den_; }
  bool is_integer() const { return den_ == 1; }

  Rational operator-() const { return Rational(-num_, den_); }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return from128((__int128)a.num_ * b.den_ + (__int128)b.num_ * a.den_,
                   (__int128)a.den_ * b.den_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return from128((__int128)a.num_ * b.num_, (__int128)a.den_ * b.den_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw std::invalid_argument("Rational: division by zero");
    return from128((__int128)a.num_ * b.den_, (__int128)a.den_ * b.num_);
  }

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) {
    return (__int128)a.num_ * b.den_ < (__int128)b.num_ * a.den_;
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

  std::string to_string() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

 private:
  static Rational from128(__int128 n, __int128 d) {
    if (d < 0) { n = -n; d = -d; }
    __int128 g = gcd128(n < 0 ? -n : n, d);
    if (g > 1) { n /= g; d /= g; }
    Rational r;
    r.num_ = (long long)n;
    r.den_ = (long long)d;
    return r;
  }
  static __int128 gcd128(__int128 a, __int128 b) {
    while (b != 0) { __int128 t = a % b; a = b; b = t; }
    return a == 0 ? 1 : a;
  }
  void normalize() {
    if (den_ < 0) { num_ = -num_; den_ = -den_; }
    long long g = std::gcd(num_ < 0 ? -num_ : num_, den_);
    if (g > 1) { num_ /= g; den_ /= g; }
  }

  long long num_ = 0;
  long long den_ = 1;
};

}  // namespace wmult
