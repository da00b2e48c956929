#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "monideal/error.hpp"
#include "monideal/exponent.hpp"

namespace monideal {

/// A monomial ideal of a d-dimensional regular local ring with fixed
/// parameters x, y, ..., z, represented by its minimal monomial generators
/// Delta(I). The generator list is an antichain in lexicographic order, so
/// equal ideals compare equal. The unit ideal is the antichain {0}.
class MonomialIdeal {
 public:
  /// Reduces `raw` to its antichain of minimal elements.
  static MonomialIdeal minimalize(std::vector<ExponentVector> raw) {
    if (raw.empty()) throw Error(ErrorKind::EmptyInput, "minimalize", "no generators");
    const std::size_t d = raw.front().dim();
    if (d < 2) throw Error(ErrorKind::InvalidArgument, "minimalize", "dimension must be at least 2");
    for (const auto& v : raw)
      if (v.dim() != d)
        throw Error(ErrorKind::DimensionMismatch, "minimalize", "generators of different lengths");

    std::sort(raw.begin(), raw.end(), [](const ExponentVector& a, const ExponentVector& b) {
      auto da = a.degree(), db = b.degree();
      return da != db ? da < db : a < b;
    });
    std::vector<ExponentVector> kept;
    for (auto& v : raw) {
      bool dominated = std::any_of(kept.begin(), kept.end(),
                                   [&](const ExponentVector& g) { return g.divides(v); });
      if (!dominated) kept.push_back(std::move(v));
    }
    std::sort(kept.begin(), kept.end());
    MonomialIdeal I;
    I.dim_ = d;
    I.gens_ = std::move(kept);
    return I;
  }

  static MonomialIdeal unit(std::size_t dim) { return minimalize({ExponentVector(dim)}); }

  /// m^k.
  static MonomialIdeal maximal_power(std::size_t dim, Exponent k = 1) {
    std::vector<ExponentVector> g;
    for_each_monomial_of_degree(dim, k, [&](const ExponentVector& v) { g.push_back(v); });
    return minimalize(std::move(g));
  }

  std::size_t dim() const noexcept { return dim_; }
  const std::vector<ExponentVector>& gens() const noexcept { return gens_; }
  bool is_unit() const { return gens_.size() == 1 && gens_.front().is_one(); }

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

 private:
  MonomialIdeal() = default;
  std::size_t dim_ = 0;
  std::vector<ExponentVector> gens_;
};

namespace detail {
inline void require_same_dim(const MonomialIdeal& I, const MonomialIdeal& J, const char* op) {
  if (I.dim() != J.dim())
    throw Error(ErrorKind::DimensionMismatch, op,
                "dimensions " + std::to_string(I.dim()) + " and " + std::to_string(J.dim()));
}
}  // namespace detail

inline bool contains(const MonomialIdeal& I, const ExponentVector& a) {
  if (a.dim() != I.dim())
    throw Error(ErrorKind::DimensionMismatch, "contains", "monomial has the wrong length");
  return std::any_of(I.gens().begin(), I.gens().end(),
                     [&](const ExponentVector& g) { return g.divides(a); });
}

/// I subset-of J.
inline bool is_subset(const MonomialIdeal& I, const MonomialIdeal& J) {
  detail::require_same_dim(I, J, "is_subset");
  return std::all_of(I.gens().begin(), I.gens().end(),
                     [&](const ExponentVector& g) { return contains(J, g); });
}

inline MonomialIdeal sum(const MonomialIdeal& I, const MonomialIdeal& J) {
  detail::require_same_dim(I, J, "sum");
  std::vector<ExponentVector> g = I.gens();
  g.insert(g.end(), J.gens().begin(), J.gens().end());
  return MonomialIdeal::minimalize(std::move(g));
}

inline MonomialIdeal product(const MonomialIdeal& I, const MonomialIdeal& J) {
  detail::require_same_dim(I, J, "product");
  std::vector<ExponentVector> g;
  g.reserve(I.gens().size() * J.gens().size());
  for (const auto& a : I.gens())
    for (const auto& b : J.gens()) g.push_back(a + b);
  return MonomialIdeal::minimalize(std::move(g));
}

inline MonomialIdeal power(const MonomialIdeal& I, Exponent k) {
  if (k < 0) throw Error(ErrorKind::InvalidArgument, "power", "negative exponent");
  MonomialIdeal r = MonomialIdeal::unit(I.dim());
  for (Exponent i = 0; i < k; ++i) r = product(r, I);
  return r;
}

inline MonomialIdeal intersect(const MonomialIdeal& I, const MonomialIdeal& J) {
  detail::require_same_dim(I, J, "intersect");
  std::vector<ExponentVector> g;
  for (const auto& a : I.gens())
    for (const auto& b : J.gens()) g.push_back(max(a, b));
  return MonomialIdeal::minimalize(std::move(g));
}

/// (I : J) = intersection over g in Delta(J) of (I : g).
inline MonomialIdeal colon(const MonomialIdeal& I, const MonomialIdeal& J) {
  detail::require_same_dim(I, J, "colon");
  std::optional<MonomialIdeal> acc;
  for (const auto& g : J.gens()) {
    std::vector<ExponentVector> q;
    for (const auto& h : I.gens()) q.push_back(monus(h, g));
    auto Ig = MonomialIdeal::minimalize(std::move(q));
    acc = acc ? intersect(*acc, Ig) : Ig;
  }
  return *acc;
}

inline Exponent ord(const MonomialIdeal& I) {
  Exponent r = I.gens().front().degree();
  for (const auto& g : I.gens()) r = std::min(r, g.degree());
  return r;
}

inline std::size_t mu(const MonomialIdeal& I) { return I.gens().size(); }

/// Exponent n with x_i^n in Delta(I), if there is one.
inline std::optional<Exponent> pure_power(const MonomialIdeal& I, std::size_t i) {
  for (const auto& g : I.gens()) {
    if (g.is_one()) return Exponent{0};
    if (g.pure_variable() == static_cast<int>(i)) return g[i];
  }
  return std::nullopt;
}

inline bool is_m_primary(const MonomialIdeal& I) {
  for (std::size_t i = 0; i < I.dim(); ++i)
    if (!pure_power(I, i)) return false;
  return true;
}

inline void require_m_primary(const MonomialIdeal& I, const char* op) {
  if (!is_m_primary(I))
    throw Error(ErrorKind::NotPrimary, op, "ideal is not primary to the maximal ideal");
}

/// True when every monomial of total degree `s` lies in I, i.e. m^s is in I.
inline bool contains_maximal_power(const MonomialIdeal& I, Exponent s) {
  bool all = true;
  for_each_monomial_of_degree(I.dim(), s, [&](const ExponentVector& v) {
    if (all && !contains(I, v)) all = false;
  });
  return all;
}

/// Smallest s with m^s contained in I.
inline Exponent index(const MonomialIdeal& I) {
  require_m_primary(I, "index");
  // Any monomial of degree 1 + sum(a_i - 1) has some coordinate >= a_i.
  Exponent bound = 1;
  for (std::size_t i = 0; i < I.dim(); ++i) bound += *pure_power(I, i) - 1;
  bound = std::max<Exponent>(bound, 0);
  for (Exponent s = ord(I); s < bound; ++s)
    if (contains_maximal_power(I, s)) return s;
  return bound;
}

struct IndexOrderPair {
  Exponent index_s = 1;
  Exponent order_r = 1;
  friend bool operator==(const IndexOrderPair&, const IndexOrderPair&) = default;
  friend auto operator<=>(const IndexOrderPair&, const IndexOrderPair&) = default;
};

}  // namespace monideal
