#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "monideal/error.hpp"

namespace monideal {

using Exponent = std::int64_t;

/// A monomial x^a y^b ... z^c, stored as its exponent tuple.
class ExponentVector {
 public:
  ExponentVector() = default;
  explicit ExponentVector(std::size_t dim) : e_(dim, 0) {}
  ExponentVector(std::initializer_list<Exponent> e) : e_(e) { check(); }
  explicit ExponentVector(std::vector<Exponent> e) : e_(std::move(e)) { check(); }

  static ExponentVector unit(std::size_t dim, std::size_t i, Exponent power = 1) {
    ExponentVector v(dim);
    v.e_.at(i) = power;
    return v;
  }

  std::size_t dim() const noexcept { return e_.size(); }
  Exponent operator[](std::size_t i) const { return e_[i]; }
  Exponent& operator[](std::size_t i) { return e_[i]; }
  std::span<const Exponent> exps() const noexcept { return e_; }
  const std::vector<Exponent>& vec() const noexcept { return e_; }

  Exponent degree() const { return std::accumulate(e_.begin(), e_.end(), Exponent{0}); }

  bool is_one() const {
    return std::all_of(e_.begin(), e_.end(), [](Exponent a) { return a == 0; });
  }

  /// Index of the only nonzero coordinate, or -1 if the support is not a
  /// single variable.
  int pure_variable() const {
    int found = -1;
    for (std::size_t i = 0; i < e_.size(); ++i) {
      if (e_[i] == 0) continue;
      if (found >= 0) return -1;
      found = static_cast<int>(i);
    }
    return found;
  }

  /// Componentwise <=, i.e. this monomial divides `other`.
  bool divides(const ExponentVector& other) const {
    for (std::size_t i = 0; i < e_.size(); ++i)
      if (e_[i] > other.e_[i]) return false;
    return true;
  }

  ExponentVector& operator+=(const ExponentVector& o) {
    for (std::size_t i = 0; i < e_.size(); ++i) e_[i] += o.e_[i];
    return *this;
  }
  friend ExponentVector operator+(ExponentVector a, const ExponentVector& b) { return a += b; }

  friend ExponentVector operator*(Exponent k, ExponentVector a) {
    for (auto& x : a.e_) x *= k;
    return a;
  }

  friend ExponentVector max(const ExponentVector& a, const ExponentVector& b) {
    ExponentVector r(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) r.e_[i] = std::max(a.e_[i], b.e_[i]);
    return r;
  }

  /// max(0, a - b) componentwise: generator of the colon (a) : (b).
  friend ExponentVector monus(const ExponentVector& a, const ExponentVector& b) {
    ExponentVector r(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) r.e_[i] = std::max<Exponent>(0, a.e_[i] - b.e_[i]);
    return r;
  }

  friend bool operator==(const ExponentVector&, const ExponentVector&) = default;
  friend auto operator<=>(const ExponentVector& a, const ExponentVector& b) { return a.e_ <=> b.e_; }

 private:
  void check() const {
    for (Exponent a : e_)
      if (a < 0) throw Error(ErrorKind::InvalidArgument, "ExponentVector", "negative exponent");
  }

  std::vector<Exponent> e_;
};

inline Exponent dot(std::span<const Exponent> w, const ExponentVector& a) {
  Exponent s = 0;
  for (std::size_t i = 0; i < a.dim(); ++i) s += w[i] * a[i];
  return s;
}

/// Calls f(v) for every exponent vector of total degree `degree` in `dim`
/// variables, in lexicographically descending order.
template <class F>
void for_each_monomial_of_degree(std::size_t dim, Exponent degree, F&& f) {
  ExponentVector v(dim);
  std::function<void(std::size_t, Exponent)> rec = [&](std::size_t i, Exponent left) {
    if (i + 1 == dim) {
      v[i] = left;
      f(static_cast<const ExponentVector&>(v));
      return;
    }
    for (Exponent a = left; a >= 0; --a) {
      v[i] = a;
      rec(i + 1, left - a);
    }
  };
  if (dim == 0) return;
  rec(0, degree);
}

/// Calls f(v) for every v with 0 <= v[i] <= bound[i].
template <class F>
void for_each_in_box(std::span<const Exponent> bound, F&& f) {
  const std::size_t dim = bound.size();
  ExponentVector v(dim);
  while (true) {
    f(static_cast<const ExponentVector&>(v));
    std::size_t i = 0;
    while (i < dim && v[i] == bound[i]) v[i++] = 0;
    if (i == dim) return;
    ++v[i];
  }
}

}  // namespace monideal

template <>
struct std::hash<monideal::ExponentVector> {
  std::size_t operator()(const monideal::ExponentVector& v) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (auto a : v.exps()) h = (h ^ static_cast<std::size_t>(a)) * 0x100000001b3ULL;
    return h;
  }
};
