#pragma once

#include <cstdint>
#include <numeric>
#include <ostream>

#include <boost/multiprecision/cpp_int.hpp>

#include "monideal/error.hpp"

namespace monideal {

/// Exact rational with 64-bit numerator and denominator. Arithmetic runs in
/// 128 bits and throws OverflowError when a reduced result does not fit,
/// so a computation can be replayed with BigRational.
class Rational64 {
 public:
  Rational64() = default;
  Rational64(std::int64_t n) : num_(n), den_(1) {}  // NOLINT(google-explicit-constructor)
  Rational64(std::int64_t n, std::int64_t d) { assign(n, d); }

  std::int64_t num() const noexcept { return num_; }
  std::int64_t den() const noexcept { return den_; }

  friend Rational64 operator+(const Rational64& a, const Rational64& b) {
    return make(static_cast<__int128>(a.num_) * b.den_ + static_cast<__int128>(b.num_) * a.den_,
                static_cast<__int128>(a.den_) * b.den_);
  }
  friend Rational64 operator-(const Rational64& a, const Rational64& b) {
    return make(static_cast<__int128>(a.num_) * b.den_ - static_cast<__int128>(b.num_) * a.den_,
                static_cast<__int128>(a.den_) * b.den_);
  }
  friend Rational64 operator*(const Rational64& a, const Rational64& b) {
    return make(static_cast<__int128>(a.num_) * b.num_, static_cast<__int128>(a.den_) * b.den_);
  }
  friend Rational64 operator/(const Rational64& a, const Rational64& b) {
    if (b.num_ == 0) throw std::domain_error("division by zero");
    return make(static_cast<__int128>(a.num_) * b.den_, static_cast<__int128>(a.den_) * b.num_);
  }
  Rational64 operator-() const { return make(-static_cast<__int128>(num_), den_); }
  Rational64& operator+=(const Rational64& b) { return *this = *this + b; }
  Rational64& operator-=(const Rational64& b) { return *this = *this - b; }
  Rational64& operator*=(const Rational64& b) { return *this = *this * b; }
  Rational64& operator/=(const Rational64& b) { return *this = *this / b; }

  friend bool operator==(const Rational64&, const Rational64&) = default;
  friend bool operator<(const Rational64& a, const Rational64& b) {
    return static_cast<__int128>(a.num_) * b.den_ < static_cast<__int128>(b.num_) * a.den_;
  }
  friend bool operator>(const Rational64& a, const Rational64& b) { return b < a; }
  friend bool operator<=(const Rational64& a, const Rational64& b) { return !(b < a); }
  friend bool operator>=(const Rational64& a, const Rational64& b) { return !(a < b); }

  friend std::ostream& operator<<(std::ostream& os, const Rational64& q) {
    os << q.num_;
    if (q.den_ != 1) os << '/' << q.den_;
    return os;
  }

 private:
  static __int128 gcd128(__int128 a, __int128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
      __int128 t = a % b;
      a = b;
      b = t;
    }
    return a;
  }

  static Rational64 make(__int128 n, __int128 d) {
    if (d < 0) {
      n = -n;
      d = -d;
    }
    __int128 g = gcd128(n, d);
    if (g > 1) {
      n /= g;
      d /= g;
    }
    constexpr __int128 lim = INT64_MAX;
    if (n > lim || n < -lim || d > lim) throw OverflowError("Rational64 overflow");
    Rational64 r;
    r.num_ = static_cast<std::int64_t>(n);
    r.den_ = static_cast<std::int64_t>(d);
    return r;
  }

  void assign(std::int64_t n, std::int64_t d) {
    if (d == 0) throw std::domain_error("zero denominator");
    *this = make(n, d);
  }

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

inline int sign(const Rational64& q) { return q.num() > 0 ? 1 : (q.num() < 0 ? -1 : 0); }
inline int sign(const BigRational& q) { return q.sign(); }

inline BigInt ceil_of(const Rational64& q) {
  std::int64_t n = q.num(), d = q.den();
  std::int64_t c = n / d;
  if (n % d != 0 && n > 0) ++c;
  return BigInt(c);
}

inline BigInt ceil_of(const BigRational& q) {
  BigInt n = boost::multiprecision::numerator(q), d = boost::multiprecision::denominator(q);
  BigInt c = n / d;
  if (n % d != 0 && n > 0) ++c;
  return c;
}

inline BigRational to_big(const Rational64& q) { return BigRational(q.num(), q.den()); }
inline BigRational to_big(const BigRational& q) { return q; }

}  // namespace monideal
