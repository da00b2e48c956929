#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "monideal/ideal.hpp"
#include "monideal/newton.hpp"

namespace monideal {

/// R_0 -> R_1 -> ... -> R_n, each step a monomial quadratic transform;
/// dirs[i] is the variable index that stays put going from R_i to R_{i+1}.
/// Variables keep their positions: in direction j, x_k' = x_k / x_j for
/// k != j and x_j' = x_j.
struct DirectionSequence {
  std::size_t dim = 0;
  std::vector<std::size_t> dirs;

  DirectionSequence() = default;
  DirectionSequence(std::size_t d, std::vector<std::size_t> ds) : dim(d), dirs(std::move(ds)) {
    for (auto j : dirs)
      if (j >= dim) throw Error(ErrorKind::InvalidArgument, "DirectionSequence", "direction out of range");
  }

  std::size_t size() const noexcept { return dirs.size(); }
  bool empty() const noexcept { return dirs.empty(); }

  DirectionSequence prefix(std::size_t n) const {
    return {dim, std::vector<std::size_t>(dirs.begin(), dirs.begin() + static_cast<std::ptrdiff_t>(n))};
  }
  DirectionSequence suffix(std::size_t from) const {
    return {dim, std::vector<std::size_t>(dirs.begin() + static_cast<std::ptrdiff_t>(from), dirs.end())};
  }
  DirectionSequence slice(std::size_t from, std::size_t to) const {
    return {dim, std::vector<std::size_t>(dirs.begin() + static_cast<std::ptrdiff_t>(from),
                                          dirs.begin() + static_cast<std::ptrdiff_t>(to))};
  }

  friend bool operator==(const DirectionSequence&, const DirectionSequence&) = default;
};

/// Square integer matrix; row i of an expansion matrix is the exponent
/// vector of original variable i written in the variables of R_n.
struct ExpansionMatrix {
  std::vector<std::vector<Exponent>> rows;

  static ExpansionMatrix identity(std::size_t d) {
    ExpansionMatrix m;
    m.rows.assign(d, std::vector<Exponent>(d, 0));
    for (std::size_t i = 0; i < d; ++i) m.rows[i][i] = 1;
    return m;
  }
  std::size_t dim() const noexcept { return rows.size(); }

  friend ExpansionMatrix operator*(const ExpansionMatrix& a, const ExpansionMatrix& b) {
    const std::size_t d = a.dim();
    ExpansionMatrix c;
    c.rows.assign(d, std::vector<Exponent>(d, 0));
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t k = 0; k < d; ++k)
        if (a.rows[i][k] != 0)
          for (std::size_t j = 0; j < d; ++j) c.rows[i][j] += a.rows[i][k] * b.rows[k][j];
    return c;
  }
  friend bool operator==(const ExpansionMatrix&, const ExpansionMatrix&) = default;

  std::vector<Exponent> row_sums() const {
    std::vector<Exponent> s;
    for (const auto& r : rows) {
      Exponent t = 0;
      for (auto v : r) t += v;
      s.push_back(t);
    }
    return s;
  }
};

namespace detail {
inline void require_direction(std::size_t dim, std::size_t j, const char* op) {
  if (j >= dim) throw Error(ErrorKind::InvalidArgument, op, "direction index out of range");
}

/// One step in direction j: old x_k = new x_k * new x_j (k != j).
inline ExpansionMatrix step_matrix(std::size_t d, std::size_t j) {
  auto m = ExpansionMatrix::identity(d);
  for (std::size_t k = 0; k < d; ++k)
    if (k != j) m.rows[k][j] = 1;
  return m;
}

inline ExpansionMatrix step_inverse(std::size_t d, std::size_t j) {
  auto m = ExpansionMatrix::identity(d);
  for (std::size_t k = 0; k < d; ++k)
    if (k != j) m.rows[k][j] = -1;
  return m;
}
}  // namespace detail

/// Transform of I in the monomial quadratic transform in direction j:
/// substitute, then divide by x_j^{ord(I)}.
inline MonomialIdeal transform_dir(const MonomialIdeal& I, std::size_t j) {
  detail::require_direction(I.dim(), j, "transform_dir");
  require_m_primary(I, "transform_dir");
  const Exponent r = ord(I);
  std::vector<ExponentVector> g;
  for (const auto& a : I.gens()) {
    ExponentVector b = a;
    b[j] = a.degree() - r;
    g.push_back(std::move(b));
  }
  return MonomialIdeal::minimalize(std::move(g));
}

/// Largest -nu_j(alpha) over Delta(I1), where nu_j(alpha) = alpha_j - sum of
/// the other exponents.
inline Exponent delta(const MonomialIdeal& I1, std::size_t j) {
  detail::require_direction(I1.dim(), j, "delta");
  require_m_primary(I1, "delta");
  Exponent best = std::numeric_limits<Exponent>::min();
  for (const auto& a : I1.gens()) best = std::max(best, a.degree() - 2 * a[j]);
  return best;
}

/// The ideal J whose closure is the complete inverse transform:
/// x_j^delta * alpha for alpha in Delta(I1), and x_k^delta for k != j.
inline MonomialIdeal cit_seed(const MonomialIdeal& I1, std::size_t j) {
  const Exponent dl = delta(I1, j);
  std::vector<ExponentVector> g;
  for (const auto& a : I1.gens()) {
    ExponentVector b = a;
    b[j] = dl + a[j] - (a.degree() - a[j]);
    g.push_back(std::move(b));
  }
  for (std::size_t k = 0; k < I1.dim(); ++k)
    if (k != j) g.push_back(ExponentVector::unit(I1.dim(), k, dl));
  return MonomialIdeal::minimalize(std::move(g));
}

/// Complete inverse transform through the membership description: a
/// monomial a lies in CIT(I1) iff |a| >= delta and the monomial b with
/// b_j = |a| - delta, b_k = a_k lies in I1. Generators are read off the box
/// with a_k <= delta (k != j) and a_j <= n_j + delta.
inline MonomialIdeal cit_by_membership(const MonomialIdeal& I1, std::size_t j) {
  const Exponent dl = delta(I1, j);
  const Exponent nj = *pure_power(I1, j);
  const std::size_t d = I1.dim();
  auto member = [&](const ExponentVector& a) {
    Exponent deg = a.degree();
    if (deg < dl) return false;
    ExponentVector b = a;
    b[j] = deg - dl;
    return contains(I1, b);
  };
  std::vector<Exponent> bound(d, dl);
  bound[j] = nj + dl;
  std::vector<ExponentVector> gens;
  for_each_in_box(bound, [&](const ExponentVector& a) {
    if (!member(a)) return;
    for (std::size_t k = 0; k < d; ++k) {
      if (a[k] == 0) continue;
      ExponentVector b = a;
      --b[k];
      if (member(b)) return;
    }
    gens.push_back(a);
  });
  return MonomialIdeal::minimalize(std::move(gens));
}

enum class CitRoute { Closure, Membership };

struct CitOptions {
  CitRoute route = CitRoute::Closure;
  bool verify = false;         // also build the other route and compare
  bool check_complete = true;  // reject incomplete inputs
};

/// Complete inverse transform of the m_1-primary complete ideal I1 from the
/// first neighbourhood point in direction j back to R: the integral closure
/// of cit_seed(I1, j).
inline MonomialIdeal cit(const MonomialIdeal& I1, std::size_t j, const CitOptions& opt = {}) {
  detail::require_direction(I1.dim(), j, "cit");
  require_m_primary(I1, "cit");
  if (opt.check_complete && !is_complete(I1))
    throw Error(ErrorKind::NotComplete, "cit", "input ideal is not integrally closed");
  MonomialIdeal out = opt.route == CitRoute::Closure ? integral_closure(cit_seed(I1, j))
                                                     : cit_by_membership(I1, j);
  if (opt.verify) {
    MonomialIdeal other = opt.route == CitRoute::Closure ? cit_by_membership(I1, j)
                                                         : integral_closure(cit_seed(I1, j));
    if (!(other == out))
      throw Error(ErrorKind::VerificationFailed, "cit", "closure and membership constructions disagree");
  }
  return out;
}

inline ExpansionMatrix expansion_matrix(const DirectionSequence& seq) {
  auto m = ExpansionMatrix::identity(seq.dim);
  for (auto j : seq.dirs) m = m * detail::step_matrix(seq.dim, j);
  return m;
}

/// Inverse of expansion_matrix(seq): row l expresses the l-th variable of
/// R_n as a Laurent monomial in the original variables.
inline ExpansionMatrix inverse_expansion_matrix(const DirectionSequence& seq) {
  auto m = ExpansionMatrix::identity(seq.dim);
  for (auto j : seq.dirs) m = detail::step_inverse(seq.dim, j) * m;
  return m;
}

/// Weights of ord_{R_stage} on the original variables.
inline WeightVector ord_weights(const DirectionSequence& seq, std::size_t stage) {
  if (stage > seq.size())
    throw Error(ErrorKind::InvalidArgument, "ord_weights", "stage out of range");
  return {expansion_matrix(seq.prefix(stage)).row_sums()};
}

/// m_0 inside m_n^2: every original variable has degree >= 2 in the
/// variables of R_n.
inline bool is_change_of_direction(const DirectionSequence& seq) {
  if (seq.empty())
    throw Error(ErrorKind::InvalidArgument, "is_change_of_direction", "empty direction sequence");
  for (auto s : expansion_matrix(seq).row_sums())
    if (s < 2) return false;
  return true;
}

/// R_n inside the order valuation ring of R_0: every variable of R_n has
/// nonnegative ord_{R_0} value.
inline bool is_proximate(const DirectionSequence& seq) {
  if (seq.empty()) throw Error(ErrorKind::InvalidArgument, "is_proximate", "empty direction sequence");
  for (auto s : inverse_expansion_matrix(seq).row_sums())
    if (s < 0) return false;
  return true;
}

}  // namespace monideal
