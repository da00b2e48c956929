#pragma once

#include <algorithm>
#include <cstddef>
#include <deque>
#include <map>
#include <numeric>
#include <optional>
#include <vector>

#include "monideal/ideal.hpp"
#include "monideal/newton.hpp"
#include "monideal/transform.hpp"

namespace monideal {

using NodePath = std::vector<std::size_t>;

struct BasePoint {
  NodePath path;  // directions from R; empty for R itself
  MonomialIdeal ideal;
  Exponent order = 0;
  std::size_t parent = 0;  // self for the root
  std::vector<std::size_t> children;
};

/// Base points of an m-primary complete monomial ideal inside the tree of
/// monomial quadratic transforms. Nodes are in breadth-first order, so
/// every parent precedes its children; node identity is the path.
class BasePointTree {
 public:
  std::size_t dim() const noexcept { return dim_; }
  const std::vector<BasePoint>& nodes() const noexcept { return nodes_; }
  const BasePoint& root() const { return nodes_.front(); }
  std::size_t size() const noexcept { return nodes_.size(); }

  std::optional<std::size_t> find(const NodePath& p) const {
    for (std::size_t i = 0; i < nodes_.size(); ++i)
      if (nodes_[i].path == p) return i;
    return std::nullopt;
  }

  bool is_chain() const {
    return std::all_of(nodes_.begin(), nodes_.end(),
                       [](const BasePoint& n) { return n.children.size() <= 1; });
  }

 private:
  friend BasePointTree base_point_tree(const MonomialIdeal&, std::size_t, bool);
  std::size_t dim_ = 0;
  std::vector<BasePoint> nodes_;
};

inline constexpr std::size_t kDefaultMaxDepth = 12;

/// Breadth-first expansion by transform_dir in every direction, keeping the
/// proper transforms. Fails when a transform is proper but not primary to
/// its maximal ideal (infinitely many base points) or when a proper
/// transform is still present below max_depth.
inline BasePointTree base_point_tree(const MonomialIdeal& I, std::size_t max_depth = kDefaultMaxDepth,
                                     bool check_complete = true) {
  const char* op = "base_point_tree";
  require_m_primary(I, op);
  if (check_complete && !is_complete(I))
    throw Error(ErrorKind::NotComplete, op, "input ideal is not integrally closed");
  BasePointTree t;
  t.dim_ = I.dim();
  if (I.is_unit()) throw Error(ErrorKind::InvalidArgument, op, "unit ideal has no base points");
  t.nodes_.push_back({{}, I, ord(I), 0, {}});
  for (std::size_t i = 0; i < t.nodes_.size(); ++i) {
    for (std::size_t j = 0; j < t.dim_; ++j) {
      MonomialIdeal T = transform_dir(t.nodes_[i].ideal, j);
      if (T.is_unit()) continue;
      NodePath p = t.nodes_[i].path;
      p.push_back(j);
      if (!is_m_primary(T))
        throw Error(ErrorKind::NotFinitelySupported, op,
                    "transform along a path of length " + std::to_string(p.size()) +
                        " is not primary to the maximal ideal");
      if (p.size() > max_depth)
        throw Error(ErrorKind::DepthExceeded, op,
                    "base points beyond depth " + std::to_string(max_depth));
      Exponent o = ord(T);
      t.nodes_.push_back({std::move(p), std::move(T), o, i, {}});
      t.nodes_[i].children.push_back(t.nodes_.size() - 1);
    }
  }
  return t;
}

/// Point basis: order of the transform at each base point, in tree order.
inline std::vector<std::pair<NodePath, Exponent>> point_basis(const MonomialIdeal& I,
                                                              std::size_t max_depth = kDefaultMaxDepth) {
  auto t = base_point_tree(I, max_depth);
  std::vector<std::pair<NodePath, Exponent>> b;
  for (const auto& n : t.nodes()) b.emplace_back(n.path, n.order);
  return b;
}

/// ord of the transform of I at the point reached by `path`; 0 once the
/// transform becomes the unit ideal.
inline Exponent order_at(MonomialIdeal I, const NodePath& path) {
  for (auto j : path) {
    if (I.is_unit()) return 0;
    I = transform_dir(I, j);
  }
  return I.is_unit() ? 0 : ord(I);
}

struct SpecialOptions {
  CitRoute route = CitRoute::Closure;
  bool verify = false;
};

/// P_{R_0 R_n}: start from the maximal ideal of R_n and take complete
/// inverse transforms back down the chain.
inline MonomialIdeal special_p(const DirectionSequence& seq, const SpecialOptions& opt = {}) {
  MonomialIdeal P = MonomialIdeal::maximal_power(seq.dim, 1);
  CitOptions co{opt.route, opt.verify, false};
  for (std::size_t i = seq.size(); i-- > 0;) P = cit(P, seq.dirs[i], co);
  return P;
}

inline IndexOrderPair index_order(const MonomialIdeal& I) {
  require_m_primary(I, "index_order");
  return {index(I), ord(I)};
}

struct PairNode {
  IndexOrderPair pair;
  /// For levels >= 2: change-of-direction flags from the top of the chain
  /// down, true meaning the left (change) branch.
  std::vector<bool> branch;
};

/// Levels 0..depth of the tree of (index, order) pairs of special *-simple
/// monomial ideals: (1,1), then (2,1), then (s+r, s) on a change of
/// direction and (s+r, r) otherwise.
inline std::vector<std::vector<PairNode>> index_order_tree(std::size_t depth) {
  if (depth < 1) throw Error(ErrorKind::InvalidArgument, "index_order_tree", "depth must be positive");
  std::vector<std::vector<PairNode>> levels;
  levels.push_back({{{1, 1}, {}}});
  levels.push_back({{{2, 1}, {}}});
  for (std::size_t l = 2; l <= depth; ++l) {
    std::vector<PairNode> next;
    for (const auto& n : levels.back()) {
      auto [s, r] = n.pair;
      PairNode left{{s + r, s}, n.branch}, right{{s + r, r}, n.branch};
      left.branch.push_back(true);
      right.branch.push_back(false);
      next.push_back(std::move(left));
      next.push_back(std::move(right));
    }
    levels.push_back(std::move(next));
  }
  return levels;
}

/// Branch of index_order_tree holding index_order(special_p(seq)).
inline std::vector<bool> pair_tree_branch(const DirectionSequence& seq) {
  std::vector<bool> b;
  const std::size_t n = seq.size();
  for (std::size_t k = 2; k <= n; ++k) b.push_back(seq.dirs[n - k] != seq.dirs[n - k + 1]);
  return b;
}

struct FactorizationResult {
  BasePointTree tree;
  std::vector<Exponent> exponents;  // aligned with tree.nodes()

  std::vector<std::pair<NodePath, Exponent>> nonzero() const {
    std::vector<std::pair<NodePath, Exponent>> out;
    for (std::size_t i = 0; i < exponents.size(); ++i)
      if (exponents[i] != 0) out.emplace_back(tree.nodes()[i].path, exponents[i]);
    return out;
  }
  Exponent at(const NodePath& p) const {
    auto i = tree.find(p);
    return i ? exponents[*i] : 0;
  }
};

/// Lipman's factorization of a finitely supported complete m-primary
/// monomial ideal into special *-simple ideals:
///   (prod_{n<0} P^{-n}) * I = prod_{n>0} P^{n}.
/// The exponents solve A n = B(I), where A[g][b] is the point-basis entry
/// at g of the special ideal attached to b. A is supported on ancestor
/// pairs with unit diagonal, so back-substitution from the deepest nodes
/// is exact. The identity is then checked with *-products.
inline FactorizationResult lipman_factor(const MonomialIdeal& I, std::size_t max_depth = kDefaultMaxDepth,
                                         const SpecialOptions& opt = {}) {
  FactorizationResult res{base_point_tree(I, max_depth), {}};
  const auto& nodes = res.tree.nodes();
  const std::size_t N = nodes.size();

  std::vector<MonomialIdeal> P;
  P.reserve(N);
  for (const auto& n : nodes) P.push_back(special_p({I.dim(), n.path}, opt));

  res.exponents.assign(N, 0);
  for (std::size_t g = N; g-- > 0;) {
    Exponent v = nodes[g].order;
    // strict descendants of g come later in breadth-first order
    std::vector<std::size_t> stack(nodes[g].children.begin(), nodes[g].children.end());
    while (!stack.empty()) {
      std::size_t b = stack.back();
      stack.pop_back();
      if (res.exponents[b] != 0) v -= order_at(P[b], nodes[g].path) * res.exponents[b];
      stack.insert(stack.end(), nodes[b].children.begin(), nodes[b].children.end());
    }
    res.exponents[g] = v;
  }

  MonomialIdeal lhs = I, rhs = MonomialIdeal::unit(I.dim());
  for (std::size_t b = 0; b < N; ++b) {
    Exponent e = res.exponents[b];
    for (Exponent k = 0; k < (e < 0 ? -e : e); ++k) {
      if (e < 0) lhs = star_product(lhs, P[b]);
      else rhs = star_product(rhs, P[b]);
    }
  }
  if (!(lhs == rhs))
    throw Error(ErrorKind::ReconstructionFailed, "lipman_factor",
                "star-product reconstruction does not reproduce the ideal");
  return res;
}

struct SpecialRecognition {
  bool special = false;
  NodePath path;
};

inline SpecialRecognition is_special_star_simple(const MonomialIdeal& I, std::size_t max_depth = kDefaultMaxDepth) {
  auto f = lipman_factor(I, max_depth);
  auto nz = f.nonzero();
  if (nz.size() == 1 && nz.front().second == 1) return {true, nz.front().first};
  return {false, {}};
}

}  // namespace monideal
