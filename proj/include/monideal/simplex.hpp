#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "monideal/rational.hpp"

namespace monideal::lp {

enum class Sense { LessEqual, Equal };

/// minimize cost . x  subject to  rows (<= or =) rhs,  x >= 0,  rhs >= 0.
/// Integer data; the solve itself is exact.
struct Problem {
  std::vector<std::vector<std::int64_t>> rows;
  std::vector<Sense> sense;
  std::vector<std::int64_t> rhs;
  std::vector<std::int64_t> cost;
};

template <class Q>
struct Solution {
  bool feasible = false;
  Q value{};
  std::vector<Q> x;
};

/// Dense two-phase tableau simplex. Dantzig pricing, falling back to
/// Bland's rule after a run of degenerate pivots.
template <class Q>
Solution<Q> solve(const Problem& p) {
  const std::size_t m = p.rows.size();
  const std::size_t n = p.cost.size();
  std::size_t n_slack = 0, n_art = 0;
  for (auto s : p.sense) (s == Sense::LessEqual ? n_slack : n_art)++;
  const std::size_t cols = n + n_slack + n_art;
  const std::size_t rhs = cols;
  const std::size_t art_begin = n + n_slack;

  std::vector<std::vector<Q>> t(m, std::vector<Q>(cols + 1));
  std::vector<std::size_t> basis(m);
  std::size_t next_slack = n, next_art = art_begin;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) t[i][j] = Q(p.rows[i][j]);
    t[i][rhs] = Q(p.rhs[i]);
    std::size_t b = p.sense[i] == Sense::LessEqual ? next_slack++ : next_art++;
    t[i][b] = Q(1);
    basis[i] = b;
  }

  std::vector<Q> z(cols + 1);
  auto pivot = [&](std::size_t r, std::size_t c) {
    Q pv = t[r][c];
    for (auto& v : t[r]) v /= pv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == r || sign(t[i][c]) == 0) continue;
      Q f = t[i][c];
      for (std::size_t j = 0; j <= cols; ++j)
        if (sign(t[r][j]) != 0) t[i][j] -= f * t[r][j];
    }
    if (sign(z[c]) != 0) {
      Q f = z[c];
      for (std::size_t j = 0; j <= cols; ++j)
        if (sign(t[r][j]) != 0) z[j] -= f * t[r][j];
    }
    basis[r] = c;
  };

  auto run = [&](std::size_t allowed_end) {
    int degenerate = 0;
    while (true) {
      std::size_t enter = cols;
      const bool bland = degenerate > 50;
      for (std::size_t j = 0; j < allowed_end; ++j) {
        if (sign(z[j]) >= 0) continue;
        if (enter == cols || (!bland && z[j] < z[enter])) enter = j;
        if (bland) break;
      }
      if (enter == cols) return;
      std::size_t leave = m;
      Q best{};
      for (std::size_t i = 0; i < m; ++i) {
        if (sign(t[i][enter]) <= 0) continue;
        Q ratio = t[i][rhs] / t[i][enter];
        if (leave == m || ratio < best || (ratio == best && basis[i] < basis[leave])) {
          leave = i;
          best = ratio;
        }
      }
      // Feasible region here is always bounded below (costs >= 0 on the
      // problems built by this library), so an unbounded column never wins.
      if (leave == m) return;
      degenerate = sign(best) == 0 ? degenerate + 1 : 0;
      pivot(leave, enter);
    }
  };

  // Phase 1: minimize the sum of artificials.
  if (n_art > 0) {
    for (std::size_t j = art_begin; j < cols; ++j) z[j] = Q(1);
    for (std::size_t i = 0; i < m; ++i)
      if (basis[i] >= art_begin)
        for (std::size_t j = 0; j <= cols; ++j) z[j] -= t[i][j];
    run(cols);
    if (sign(z[rhs]) != 0) return {};
    for (std::size_t i = 0; i < m; ++i) {
      if (basis[i] < art_begin) continue;
      for (std::size_t j = 0; j < art_begin; ++j)
        if (sign(t[i][j]) != 0) {
          pivot(i, j);
          break;
        }
    }
  }

  // Phase 2.
  for (std::size_t j = 0; j <= cols; ++j) z[j] = Q(0);
  for (std::size_t j = 0; j < n; ++j) z[j] = Q(p.cost[j]);
  for (std::size_t i = 0; i < m; ++i) {
    if (basis[i] >= n) continue;
    Q c = Q(p.cost[basis[i]]);
    if (sign(c) == 0) continue;
    for (std::size_t j = 0; j <= cols; ++j) z[j] -= c * t[i][j];
  }
  run(art_begin);

  Solution<Q> s;
  s.feasible = true;
  s.value = -z[rhs];
  s.x.assign(n, Q(0));
  for (std::size_t i = 0; i < m; ++i)
    if (basis[i] < n) s.x[basis[i]] = t[i][rhs];
  return s;
}

/// Solves in 64-bit rationals, replaying in arbitrary precision on overflow.
inline Solution<BigRational> solve_exact(const Problem& p) {
  try {
    auto s = solve<Rational64>(p);
    Solution<BigRational> r;
    r.feasible = s.feasible;
    r.value = to_big(s.value);
    for (const auto& v : s.x) r.x.push_back(to_big(v));
    return r;
  } catch (const OverflowError&) {
    return solve<BigRational>(p);
  }
}

}  // namespace monideal::lp
