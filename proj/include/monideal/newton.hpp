#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <limits>
#include <optional>
#include <vector>

#include "monideal/ideal.hpp"
#include "monideal/rational.hpp"
#include "monideal/simplex.hpp"

namespace monideal {

/// A monomial valuation: positive integer weights on the variables. Its
/// value on a monomial is the dot product, on an ideal the minimum over
/// Delta(I).
struct WeightVector {
  std::vector<Exponent> weights;

  std::size_t dim() const noexcept { return weights.size(); }
  Exponent operator()(const ExponentVector& a) const { return dot(weights, a); }

  friend bool operator==(const WeightVector&, const WeightVector&) = default;
  friend auto operator<=>(const WeightVector&, const WeightVector&) = default;
};

struct Facet {
  WeightVector normal;
  Exponent offset = 0;  // {p : normal . p >= offset}
  bool bounded = true;
  friend bool operator==(const Facet&, const Facet&) = default;
};

/// conv(Delta(I)) + R^d_{>=0} of an m-primary monomial ideal.
struct NewtonPolyhedron {
  std::size_t dim = 0;
  std::vector<ExponentVector> vertices;
  std::vector<Facet> facets;
};

struct NewtonOptions {
  /// Largest ambient dimension for which bounded facets are enumerated.
  std::size_t facet_dimension_limit = 4;
};

inline Exponent weight_value(const WeightVector& w, const MonomialIdeal& I) {
  if (w.dim() != I.dim())
    throw Error(ErrorKind::DimensionMismatch, "weight_value", "weight vector has the wrong length");
  Exponent v = std::numeric_limits<Exponent>::max();
  for (const auto& g : I.gens()) v = std::min(v, w(g));
  return v;
}

namespace detail {

/// min  sum_i lambda_i g_i[t]  over convex combinations of `points` with
/// sum_i lambda_i g_i[k] <= bound[k] for k != t. nullopt if no combination
/// fits under `bound`.
inline std::optional<BigRational> column_minimum(const std::vector<ExponentVector>& points,
                                                 std::size_t t, const ExponentVector& bound) {
  const std::size_t d = bound.dim();
  lp::Problem p;
  for (std::size_t k = 0; k < d; ++k) {
    if (k == t) continue;
    std::vector<std::int64_t> row;
    row.reserve(points.size());
    for (const auto& g : points) row.push_back(g[k]);
    p.rows.push_back(std::move(row));
    p.sense.push_back(lp::Sense::LessEqual);
    p.rhs.push_back(bound[k]);
  }
  p.rows.emplace_back(points.size(), 1);
  p.sense.push_back(lp::Sense::Equal);
  p.rhs.push_back(1);
  for (const auto& g : points) p.cost.push_back(g[t]);
  auto s = lp::solve_exact(p);
  if (!s.feasible) return std::nullopt;
  return s.value;
}

inline bool in_hull_of(const std::vector<ExponentVector>& points, const ExponentVector& a) {
  if (points.empty()) return false;
  for (const auto& g : points)
    if (g.divides(a)) return true;
  auto v = column_minimum(points, 0, a);
  return v && *v <= BigRational(a[0]);
}

}  // namespace detail

/// Whether a lies in conv(Delta(I)) + R^d_{>=0}, i.e. whether the monomial
/// a belongs to the integral closure of I. Decided by an exact LP over the
/// convex multipliers of the generators.
inline bool in_newton_polyhedron(const MonomialIdeal& I, const ExponentVector& a) {
  if (a.dim() != I.dim())
    throw Error(ErrorKind::DimensionMismatch, "in_newton_polyhedron", "monomial has the wrong length");
  return detail::in_hull_of(I.gens(), a);
}

/// Generators of I that are vertices of its Newton polyhedron. A generator
/// is dropped when it lies in the polyhedron of the remaining ones, which
/// leaves the polyhedron unchanged.
inline std::vector<ExponentVector> newton_vertices(const MonomialIdeal& I) {
  std::vector<ExponentVector> pts = I.gens();
  for (std::size_t i = 0; i < pts.size();) {
    std::vector<ExponentVector> rest;
    rest.reserve(pts.size() - 1);
    for (std::size_t j = 0; j < pts.size(); ++j)
      if (j != i) rest.push_back(pts[j]);
    if (detail::in_hull_of(rest, pts[i]))
      pts = std::move(rest);
    else
      ++i;
  }
  return pts;
}

/// Minimal lattice points of the Newton polyhedron.
///
/// A minimal lattice point p never leaves the box [0, M_1] x ... x [0, M_d]
/// with M_i the largest i-th exponent of a generator: if p_i > M_i, the
/// convex combination witnessing p also sits below p - e_i. The box is
/// swept column by column along the coordinate t with the largest M_t;
/// each column gets the smallest admissible t-exponent from one LP, and a
/// column's point is minimal iff every neighbouring column r - e_k has a
/// strictly larger threshold.
inline MonomialIdeal integral_closure(const MonomialIdeal& I) {
  const std::size_t d = I.dim();
  if (I.is_unit() || I.gens().size() == 1) return I;

  std::vector<ExponentVector> pts =
      I.gens().size() > 2 * d + 2 ? newton_vertices(I) : I.gens();
  std::vector<Exponent> box(d, 0);
  for (const auto& g : pts)
    for (std::size_t k = 0; k < d; ++k) box[k] = std::max(box[k], g[k]);
  const std::size_t t = static_cast<std::size_t>(std::max_element(box.begin(), box.end()) - box.begin());

  // Column grid over the coordinates other than t.
  std::vector<std::size_t> other;
  for (std::size_t k = 0; k < d; ++k)
    if (k != t) other.push_back(k);
  std::vector<std::size_t> stride(other.size());
  std::size_t cells = 1;
  for (std::size_t i = 0; i < other.size(); ++i) {
    stride[i] = cells;
    cells *= static_cast<std::size_t>(box[other[i]] + 1);
  }
  constexpr Exponent kNone = -1;
  std::vector<Exponent> level(cells, kNone);

  ExponentVector r(d);
  for (std::size_t cell = 0; cell < cells; ++cell) {
    std::size_t rem = cell;
    for (std::size_t i = other.size(); i-- > 0;) {
      r[other[i]] = static_cast<Exponent>(rem / stride[i]);
      rem %= stride[i];
    }
    r[t] = box[t];
    // Cells are visited so that every r - e_k precedes r.
    Exponent upper = std::numeric_limits<Exponent>::max();
    bool any_neighbour_zero = false;
    for (std::size_t i = 0; i < other.size(); ++i) {
      if (r[other[i]] == 0) continue;
      Exponent nb = level[cell - stride[i]];
      if (nb != kNone) upper = std::min(upper, nb);
      if (nb == 0) any_neighbour_zero = true;
    }
    for (const auto& g : pts)
      if (g.divides(r)) upper = std::min(upper, g[t]);
    if (any_neighbour_zero || upper == 0) {
      level[cell] = 0;
      continue;
    }
    auto v = detail::column_minimum(pts, t, r);
    level[cell] = v ? static_cast<Exponent>(ceil_of(*v)) : kNone;
  }

  std::vector<ExponentVector> gens;
  for (std::size_t cell = 0; cell < cells; ++cell) {
    if (level[cell] == kNone) continue;
    std::size_t rem = cell;
    for (std::size_t i = other.size(); i-- > 0;) {
      r[other[i]] = static_cast<Exponent>(rem / stride[i]);
      rem %= stride[i];
    }
    bool minimal = true;
    for (std::size_t i = 0; i < other.size() && minimal; ++i) {
      if (r[other[i]] == 0) continue;
      Exponent nb = level[cell - stride[i]];
      if (nb != kNone && nb <= level[cell]) minimal = false;
    }
    if (!minimal) continue;
    r[t] = level[cell];
    gens.push_back(r);
  }
  return MonomialIdeal::minimalize(std::move(gens));
}

/// Power test for integral dependence of a monomial: k a is a sum of k
/// generators of I (componentwise <=) for some k <= max_power. Only sums
/// that stay below max_power * a are kept.
inline bool in_closure_by_powers(const MonomialIdeal& I, const ExponentVector& a, Exponent max_power = 8) {
  if (a.dim() != I.dim())
    throw Error(ErrorKind::DimensionMismatch, "in_closure_by_powers", "monomial has the wrong length");
  const ExponentVector cap = max_power * a;
  std::vector<ExponentVector> level{ExponentVector(a.dim())};
  for (Exponent k = 1; k <= max_power; ++k) {
    std::vector<ExponentVector> next;
    for (const auto& s : level)
      for (const auto& g : I.gens()) {
        ExponentVector t = s + g;
        if (t.divides(cap)) next.push_back(std::move(t));
      }
    if (next.empty()) return false;
    level = MonomialIdeal::minimalize(std::move(next)).gens();
    const ExponentVector ka = k * a;
    for (const auto& s : level)
      if (s.divides(ka)) return true;
  }
  return false;
}

inline bool is_complete(const MonomialIdeal& I) { return integral_closure(I) == I; }

/// I * J: the integral closure of the product.
inline MonomialIdeal star_product(const MonomialIdeal& I, const MonomialIdeal& J) {
  detail::require_same_dim(I, J, "star_product");
  return integral_closure(product(I, J));
}

inline MonomialIdeal star_power(const MonomialIdeal& I, Exponent k) {
  MonomialIdeal r = MonomialIdeal::unit(I.dim());
  for (Exponent i = 0; i < k; ++i) r = star_product(r, I);
  return r;
}

namespace detail {

inline BigInt determinant(std::vector<std::vector<BigInt>> a) {
  // Bareiss fraction-free elimination.
  const std::size_t n = a.size();
  if (n == 0) return 1;
  BigInt prev = 1;
  int s = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && a[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(a[k], a[p]);
      s = -s;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return s * a[n - 1][n - 1];
}

/// Integer normal of the hyperplane through d points (generalized cross
/// product of the difference vectors); zero if they are affinely dependent.
inline std::vector<BigInt> hyperplane_normal(const std::vector<const ExponentVector*>& pts) {
  const std::size_t d = pts.front()->dim();
  std::vector<std::vector<BigInt>> diff(d - 1, std::vector<BigInt>(d));
  for (std::size_t i = 1; i < d; ++i)
    for (std::size_t k = 0; k < d; ++k) diff[i - 1][k] = BigInt((*pts[i])[k] - (*pts[0])[k]);
  std::vector<BigInt> w(d);
  for (std::size_t c = 0; c < d; ++c) {
    std::vector<std::vector<BigInt>> minor(d - 1);
    for (std::size_t i = 0; i < d - 1; ++i)
      for (std::size_t k = 0; k < d; ++k)
        if (k != c) minor[i].push_back(diff[i][k]);
    BigInt det = determinant(std::move(minor));
    w[c] = (c % 2 == 0) ? det : BigInt(-det);
  }
  return w;
}

}  // namespace detail

/// Vertices and facets of the Newton polyhedron of an m-primary ideal.
/// Bounded facets are found among hyperplanes through d vertices whose
/// primitive normal is strictly positive and which support every vertex;
/// the unbounded facets are the coordinate hyperplanes.
inline NewtonPolyhedron newton_polyhedron(const MonomialIdeal& I, const NewtonOptions& opt = {}) {
  require_m_primary(I, "rees_valuations");
  const std::size_t d = I.dim();
  if (d > opt.facet_dimension_limit)
    throw Error(ErrorKind::DimensionLimit, "rees_valuations",
                "facet enumeration is limited to dimension " + std::to_string(opt.facet_dimension_limit));
  NewtonPolyhedron P;
  P.dim = d;
  P.vertices = newton_vertices(I);
  const auto& V = P.vertices;

  std::vector<WeightVector> normals;
  if (V.size() >= d) {
    std::vector<std::size_t> idx(d);
    for (std::size_t i = 0; i < d; ++i) idx[i] = i;
    while (true) {
      std::vector<const ExponentVector*> pts;
      for (auto i : idx) pts.push_back(&V[i]);
      auto w = detail::hyperplane_normal(pts);
      BigInt g = 0;
      for (const auto& c : w) g = boost::multiprecision::gcd(g, c);
      if (g != 0) {
        int sgn = w[0] > 0 ? 1 : -1;
        bool positive = true;
        WeightVector wv;
        for (auto& c : w) {
          c = c / g * sgn;
          if (c <= 0) positive = false;
          else wv.weights.push_back(static_cast<Exponent>(c));
        }
        if (positive) {
          Exponent off = wv(V[idx[0]]);
          bool supports = std::all_of(V.begin(), V.end(),
                                      [&](const ExponentVector& v) { return wv(v) >= off; });
          if (supports && std::find(normals.begin(), normals.end(), wv) == normals.end())
            normals.push_back(wv);
        }
      }
      // next combination
      std::size_t i = d;
      while (i-- > 0 && idx[i] == V.size() - d + i) {
      }
      if (i == static_cast<std::size_t>(-1)) break;
      ++idx[i];
      for (std::size_t j = i + 1; j < d; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  std::sort(normals.begin(), normals.end());
  for (auto& w : normals) P.facets.push_back({w, weight_value(w, I), true});
  for (std::size_t k = 0; k < d; ++k) {
    WeightVector e{std::vector<Exponent>(d, 0)};
    e.weights[k] = 1;
    P.facets.push_back({e, 0, false});
  }
  return P;
}

/// Rees valuations of an m-primary monomial ideal: the primitive normals
/// of the bounded facets of its Newton polyhedron, in lexicographic order.
inline std::vector<WeightVector> rees_valuations(const MonomialIdeal& I, const NewtonOptions& opt = {}) {
  auto P = newton_polyhedron(I, opt);
  std::vector<WeightVector> out;
  for (const auto& f : P.facets)
    if (f.bounded) out.push_back(f.normal);
  return out;
}

}  // namespace monideal
