#pragma once

#include <algorithm>
#include <cctype>
#include <optional>
#include <cstddef>
#include <sstream>
#include <string>
#include <vector>

#include "monideal/factor.hpp"
#include "monideal/ideal.hpp"
#include "monideal/transform.hpp"

namespace monideal::cli {

/// Names of the fixed regular system of parameters, x, y, ..., z.
class VariableNames {
 public:
  VariableNames() : VariableNames(3) {}
  explicit VariableNames(std::size_t dim) {
    if (dim == 2) names_ = {"x", "y"};
    else if (dim == 3) names_ = {"x", "y", "z"};
    else if (dim == 4) names_ = {"x", "y", "z", "w"};
    else
      for (std::size_t i = 1; i <= dim; ++i) names_.push_back("x" + std::to_string(i));
  }
  explicit VariableNames(std::vector<std::string> names) : names_(std::move(names)) {
    if (names_.size() < 2) throw Error(ErrorKind::InvalidArgument, "vars", "at least two variables are required");
    for (const auto& n : names_) {
      bool ok = !n.empty() && (std::isalpha(static_cast<unsigned char>(n[0])) || n[0] == '_') &&
                std::all_of(n.begin(), n.end(), [](char c) {
                  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
                });
      if (!ok) throw Error(ErrorKind::InvalidArgument, "vars", "invalid variable name '" + n + "'");
      if (n == "m") throw Error(ErrorKind::InvalidArgument, "vars", "'m' is reserved for the maximal ideal");
    }
    auto sorted = names_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw Error(ErrorKind::InvalidArgument, "vars", "duplicate variable name");
  }

  std::size_t dim() const noexcept { return names_.size(); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  const std::string& operator[](std::size_t i) const { return names_[i]; }

  std::optional<std::size_t> find(const std::string& n) const {
    auto it = std::find(names_.begin(), names_.end(), n);
    if (it == names_.end()) return std::nullopt;
    return static_cast<std::size_t>(it - names_.begin());
  }

  std::size_t index_of(const std::string& n, const char* op) const {
    auto i = find(n);
    if (!i) throw Error(ErrorKind::UnknownVariable, op, "unknown variable '" + n + "'");
    return *i;
  }

 private:
  std::vector<std::string> names_;
};

inline std::string render(const ExponentVector& a, const VariableNames& v) {
  std::string s;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    if (a[i] == 0) continue;
    if (!s.empty()) s += '*';
    s += v[i];
    if (a[i] > 1) s += '^' + std::to_string(a[i]);
  }
  return s.empty() ? "1" : s;
}

/// "(x^2, y, z)": generators in descending lexicographic order.
inline std::string render(const MonomialIdeal& I, const VariableNames& v) {
  std::string s = "(";
  bool first = true;
  for (auto it = I.gens().rbegin(); it != I.gens().rend(); ++it) {
    if (!first) s += ", ";
    first = false;
    s += render(*it, v);
  }
  return s + ")";
}

inline std::string render_path(const NodePath& p, const VariableNames& v) {
  if (p.empty()) return "root";
  std::string s;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) s += ',';
    s += v[p[i]];
  }
  return s;
}

inline std::string render(const WeightVector& w) {
  std::string s = "(";
  for (std::size_t i = 0; i < w.dim(); ++i) s += (i ? "," : "") + std::to_string(w.weights[i]);
  return s + ")";
}

/// "x,y,y,z" read root first; "" or "-" is the empty sequence.
inline DirectionSequence parse_direction_sequence(const std::string& text, const VariableNames& v) {
  DirectionSequence seq;
  seq.dim = v.dim();
  if (text.empty() || text == "-") return seq;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    seq.dirs.push_back(v.index_of(item, "direction_sequence"));
  }
  return seq;
}

inline std::string render(const DirectionSequence& s, const VariableNames& v) {
  return s.empty() ? "-" : render_path(s.dirs, v);
}

}  // namespace monideal::cli
