#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "monideal/cli/names.hpp"
#include "monideal/cli/parser.hpp"
#include "monideal/cli/serialize.hpp"
#include "monideal/factor.hpp"
#include "monideal/newton.hpp"
#include "monideal/transform.hpp"

namespace monideal::cli {

struct SessionOptions {
  std::size_t max_depth = kDefaultMaxDepth;
  bool verify = false;
  Exponent power_test_bound = 8;
  NewtonOptions newton;
};

/// Session state: the variables and the `let` bindings.
struct Workspace {
  VariableNames vars;
  Bindings bindings;
  SessionOptions options;

  Workspace() = default;
  explicit Workspace(VariableNames v, SessionOptions o = {}) : vars(std::move(v)), options(o) {}
  std::size_t dim() const noexcept { return vars.dim(); }
};

struct CommandOutput {
  std::string text;
  json record;  // {"command", "inputs", "result"}
};

/// A library or syntax error raised while running a command, with the
/// command name and its inputs rendered back as monomials.
class CommandError : public Error {
 public:
  CommandError(const Error& e, std::string command, std::vector<std::string> inputs)
      : Error(e.kind(), e.operation(), e.detail()), command_(std::move(command)), inputs_(std::move(inputs)) {}

  const std::string& command() const noexcept { return command_; }
  const std::vector<std::string>& inputs() const noexcept { return inputs_; }

  json record() const {
    return {{"error",
             {{"kind", to_string(kind())},
              {"operation", operation()},
              {"message", detail()},
              {"command", command_},
              {"inputs", inputs_}}}};
  }

 private:
  std::string command_;
  std::vector<std::string> inputs_;
};

/// Cells of an exponent table over the two variables other than `dir` in
/// dimension 3: cell[row][col] = c with x_dir^c * u^col * v^row in the set.
using ExponentTable = std::vector<std::vector<std::optional<Exponent>>>;

struct CitTables {
  std::size_t dir = 0;
  std::size_t col_var = 0, row_var = 0;
  ExponentTable image;  // phi(Delta(I1)) = x^delta * Delta(I1)
  ExponentTable full;   // Delta(CIT(I1))
};

inline CitTables cit_tables(const MonomialIdeal& I1, std::size_t dir, const CitOptions& opt = {}) {
  if (I1.dim() != 3) throw Error(ErrorKind::InvalidArgument, "table", "tables are drawn in dimension 3 only");
  MonomialIdeal I = cit(I1, dir, opt);
  const Exponent dl = delta(I1, dir);
  CitTables t;
  t.dir = dir;
  std::vector<std::size_t> other;
  for (std::size_t k = 0; k < 3; ++k)
    if (k != dir) other.push_back(k);
  t.col_var = other[0];
  t.row_var = other[1];
  const auto n = static_cast<std::size_t>(dl + 1);
  t.image.assign(n, std::vector<std::optional<Exponent>>(n));
  t.full = t.image;
  for (const auto& a : I1.gens()) {
    ExponentVector b = a;
    b[dir] = dl + a[dir] - (a.degree() - a[dir]);
    t.image.at(static_cast<std::size_t>(b[t.row_var])).at(static_cast<std::size_t>(b[t.col_var])) = b[dir];
  }
  for (const auto& a : I.gens())
    t.full.at(static_cast<std::size_t>(a[t.row_var])).at(static_cast<std::size_t>(a[t.col_var])) = a[dir];
  return t;
}

inline std::string render_table(const ExponentTable& tab, const std::string& col_name, const std::string& row_name) {
  std::ostringstream os;
  const std::size_t n = tab.size();
  os << row_name << "\\" << col_name;
  for (std::size_t c = 0; c < n; ++c) os << " | " << c;
  os << '\n';
  for (std::size_t r = 0; r < n; ++r) {
    os << r;
    for (std::size_t c = 0; c < n; ++c) os << " | " << (tab[r][c] ? std::to_string(*tab[r][c]) : " ");
    os << '\n';
  }
  return os.str();
}

inline json table_json(const ExponentTable& tab) {
  json rows = json::array();
  for (const auto& r : tab) {
    json row = json::array();
    for (const auto& c : r) row.push_back(c ? json(*c) : json(nullptr));
    rows.push_back(std::move(row));
  }
  return rows;
}

namespace detail {

inline std::string trim(std::string s) {
  s.erase(0, s.find_first_not_of(" \t\r\n"));
  auto e = s.find_last_not_of(" \t\r\n");
  s.erase(e == std::string::npos ? 0 : e + 1);
  return s;
}

inline std::vector<std::string> words(const std::string& s) {
  std::istringstream is(s);
  std::vector<std::string> w;
  for (std::string t; is >> t;) w.push_back(t);
  return w;
}

inline Exponent to_count(const std::string& s, const char* op) {
  if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }) ||
      s.size() > 9)
    throw Error(ErrorKind::InvalidArgument, op, "expected a nonnegative integer, got '" + s + "'");
  return std::stoll(s);
}

inline json path_json(const NodePath& p, const VariableNames& v) {
  json a = json::array();
  for (auto j : p) a.push_back(v[j]);
  return a;
}

}  // namespace detail

/// Runs one command line against the workspace. Commands:
///   closure A | complete? A | order A | index A | mu A | primary? A
///   star A B | prod A B | colon A B | cap A B
///   transform A <dir> | delta A <dir> | cit A <dir> | table A <dir>
///   special <dirseq> | weights <dirseq> <stage> | expand <dirseq>
///   changedir <dirseq> | proximate <dirseq>
///   basepoints A | pointbasis A | factor A | special? A | rees A | indexorder A
///   pairtree <depth> | let NAME = A
/// A and B are ideal expressions; <dirseq> is "x,y,y,z" read root first.
inline CommandOutput run_command(Workspace& ws, const std::string& line) {
  const std::string src = detail::trim(line);
  const auto sp = src.find_first_of(" \t");
  const std::string cmd = src.substr(0, sp);
  const std::string rest = sp == std::string::npos ? "" : detail::trim(src.substr(sp));
  const VariableNames& v = ws.vars;
  std::vector<std::string> inputs;

  CitOptions cit_opt{CitRoute::Closure, ws.options.verify, true};
  SpecialOptions sp_opt{CitRoute::Closure, ws.options.verify};

  auto out = [&](std::string text, json result) {
    return CommandOutput{std::move(text), {{"command", cmd}, {"inputs", inputs}, {"result", std::move(result)}}};
  };
  auto ideal_out = [&](const MonomialIdeal& I) { return out(render(I, v), serialize(I, v)); };

  try {
    ExpressionParser parser(rest, v, &ws.bindings);
    auto next_ideal = [&]() {
      auto I = parser.parse_ideal();
      inputs.push_back(render(I, v));
      return I;
    };
    auto tail = [&]() { return detail::trim(rest.substr(std::min(parser.position(), rest.size()))); };
    auto no_tail = [&]() {
      if (!tail().empty())
        throw Error(ErrorKind::Parse, cmd, "unexpected trailing input '" + tail() + "'");
    };
    auto one = [&]() {
      auto I = next_ideal();
      no_tail();
      return I;
    };
    auto with_dir = [&](MonomialIdeal& I) {
      I = next_ideal();
      auto w = detail::words(tail());
      if (w.size() != 1) throw Error(ErrorKind::InvalidArgument, cmd, "expected an ideal and a direction");
      inputs.push_back(w[0]);
      return v.index_of(w[0], cmd.c_str());
    };
    auto seq_arg = [&](std::size_t extra) {
      auto w = detail::words(rest);
      if (w.size() < extra || w.size() > extra + 1)
        throw Error(ErrorKind::InvalidArgument, cmd, "expected a direction sequence");
      std::string s = w.size() == extra ? "" : w[0];
      inputs.push_back(s.empty() ? "-" : s);
      return parse_direction_sequence(s, v);
    };
    auto verify_closure = [&](const MonomialIdeal& I, const MonomialIdeal& C) {
      if (!ws.options.verify) return;
      for (const auto& g : C.gens())
        if (!contains(I, g) && !in_closure_by_powers(I, g, ws.options.power_test_bound))
          throw Error(ErrorKind::VerificationFailed, "integral_closure",
                      "power test does not confirm generator " + render(g, v));
    };

    if (cmd == "closure") {
      auto I = one();
      auto C = integral_closure(I);
      verify_closure(I, C);
      return ideal_out(C);
    }
    if (cmd == "complete?") {
      bool b = is_complete(one());
      return out(b ? "true" : "false", b);
    }
    if (cmd == "order") {
      auto r = ord(one());
      return out(std::to_string(r), r);
    }
    if (cmd == "index") {
      auto s = index(one());
      return out(std::to_string(s), s);
    }
    if (cmd == "mu") {
      auto n = mu(one());
      return out(std::to_string(n), n);
    }
    if (cmd == "primary?") {
      bool b = is_m_primary(one());
      return out(b ? "true" : "false", b);
    }
    if (cmd == "star" || cmd == "prod" || cmd == "colon" || cmd == "cap") {
      auto A = next_ideal();
      auto B = next_ideal();
      no_tail();
      if (cmd == "star") {
        auto P = product(A, B);
        auto C = integral_closure(P);
        verify_closure(P, C);
        return ideal_out(C);
      }
      if (cmd == "prod") return ideal_out(product(A, B));
      if (cmd == "colon") return ideal_out(colon(A, B));
      return ideal_out(intersect(A, B));
    }
    if (cmd == "transform" || cmd == "delta" || cmd == "cit" || cmd == "table") {
      MonomialIdeal A = MonomialIdeal::unit(v.dim());
      std::size_t j = with_dir(A);
      if (cmd == "transform") return ideal_out(transform_dir(A, j));
      if (cmd == "delta") {
        auto dl = delta(A, j);
        return out(std::to_string(dl), dl);
      }
      if (cmd == "cit") return ideal_out(cit(A, j, cit_opt));
      auto t = cit_tables(A, j, cit_opt);
      const std::string caption = "entry c in column i, row j: " + v[t.dir] + "^c " + v[t.col_var] + "^i " +
                                  v[t.row_var] + "^j\n";
      std::string text = caption + "image of Delta(" + inputs[0] + ") under phi:\n" +
                         render_table(t.image, v[t.col_var], v[t.row_var]) + "Delta(cit):\n" +
                         render_table(t.full, v[t.col_var], v[t.row_var]);
      if (!text.empty() && text.back() == '\n') text.pop_back();
      return out(text, {{"image", table_json(t.image)},
                        {"full", table_json(t.full)},
                        {"columns", v[t.col_var]},
                        {"rows", v[t.row_var]}});
    }
    if (cmd == "special") {
      auto seq = seq_arg(0);
      return ideal_out(special_p(seq, sp_opt));
    }
    if (cmd == "weights") {
      auto w = detail::words(rest);
      if (w.empty() || w.size() > 2)
        throw Error(ErrorKind::InvalidArgument, cmd, "expected <dirseq> <stage>");
      std::string s = w.size() == 2 ? w[0] : "";
      inputs = {s.empty() ? "-" : s, w.back()};
      auto seq = parse_direction_sequence(s, v);
      auto wv = ord_weights(seq, static_cast<std::size_t>(detail::to_count(w.back(), "weights")));
      return out(render(wv), wv.weights);
    }
    if (cmd == "expand") {
      auto E = expansion_matrix(seq_arg(0));
      std::string text;
      for (std::size_t i = 0; i < E.dim(); ++i) {
        text += v[i] + " =";
        ExponentVector row(E.rows[i]);
        text += " " + render(row, v) + (i + 1 < E.dim() ? "\n" : "");
      }
      return out(text, E.rows);
    }
    if (cmd == "changedir" || cmd == "proximate") {
      auto seq = seq_arg(0);
      bool b = cmd == "changedir" ? is_change_of_direction(seq) : is_proximate(seq);
      return out(b ? "true" : "false", b);
    }
    if (cmd == "basepoints") {
      auto t = base_point_tree(one(), ws.options.max_depth);
      std::string text;
      json arr = json::array();
      for (const auto& n : t.nodes()) {
        if (!text.empty()) text += '\n';
        text += render_path(n.path, v) + ": " + render(n.ideal, v);
        arr.push_back({{"path", detail::path_json(n.path, v)}, {"order", n.order}, {"ideal", serialize(n.ideal, v)}});
      }
      return out(text, arr);
    }
    if (cmd == "pointbasis") {
      auto b = point_basis(one(), ws.options.max_depth);
      std::string text;
      json arr = json::array();
      for (const auto& [p, o] : b) {
        text += (text.empty() ? "" : " ") + render_path(p, v) + ":" + std::to_string(o);
        arr.push_back({{"path", detail::path_json(p, v)}, {"value", o}});
      }
      return out(text, arr);
    }
    if (cmd == "factor") {
      auto f = lipman_factor(one(), ws.options.max_depth, sp_opt);
      std::string text;
      json arr = json::array();
      for (const auto& [p, e] : f.nonzero()) {
        text += (text.empty() ? "" : " ") + render_path(p, v) + ":" + std::to_string(e);
        arr.push_back({{"path", detail::path_json(p, v)}, {"exponent", e}});
      }
      return out(text, arr);
    }
    if (cmd == "special?") {
      auto r = is_special_star_simple(one(), ws.options.max_depth);
      std::string text = r.special ? "true " + render(DirectionSequence{v.dim(), r.path}, v) : "false";
      return out(text, {{"special", r.special}, {"path", detail::path_json(r.path, v)}});
    }
    if (cmd == "rees") {
      auto rv = rees_valuations(one(), ws.options.newton);
      std::string text;
      json arr = json::array();
      for (const auto& w : rv) {
        text += (text.empty() ? "" : " ") + render(w);
        arr.push_back(w.weights);
      }
      return out(text, arr);
    }
    if (cmd == "indexorder") {
      auto p = index_order(one());
      return out("(" + std::to_string(p.index_s) + "," + std::to_string(p.order_r) + ")",
                 {{"index", p.index_s}, {"order", p.order_r}});
    }
    if (cmd == "pairtree") {
      auto w = detail::words(rest);
      if (w.size() != 1) throw Error(ErrorKind::InvalidArgument, cmd, "expected a depth");
      inputs = w;
      auto levels = index_order_tree(static_cast<std::size_t>(detail::to_count(w[0], "pairtree")));
      std::string text;
      json arr = json::array();
      for (std::size_t l = 0; l < levels.size(); ++l) {
        text += (l ? "\n" : "") + std::string("level ") + std::to_string(l) + ":";
        json lv = json::array();
        for (const auto& n : levels[l]) {
          text += " (" + std::to_string(n.pair.index_s) + "," + std::to_string(n.pair.order_r) + ")";
          lv.push_back({n.pair.index_s, n.pair.order_r});
        }
        arr.push_back(std::move(lv));
      }
      return out(text, arr);
    }
    if (cmd == "let") {
      auto eq = rest.find('=');
      if (eq == std::string::npos) throw Error(ErrorKind::Parse, cmd, "expected NAME = expression");
      std::string name = detail::trim(rest.substr(0, eq));
      bool ok = !name.empty() && (std::isalpha(static_cast<unsigned char>(name[0])) || name[0] == '_') &&
                std::all_of(name.begin(), name.end(),
                            [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
      if (!ok || v.find(name) || name == "m" || name == "closure" || name == "star" || name == "colon" ||
          name == "cap")
        throw Error(ErrorKind::InvalidArgument, cmd, "invalid binding name '" + name + "'");
      auto I = parse_ideal(rest.substr(eq + 1), v, &ws.bindings);
      inputs = {name, render(I, v)};
      ws.bindings.insert_or_assign(name, I);
      return out(name + " = " + render(I, v), {{"name", name}, {"value", serialize(I, v)}});
    }
    throw Error(ErrorKind::InvalidArgument, "run_command", "unknown command '" + cmd + "'");
  } catch (const CommandError&) {
    throw;
  } catch (const Error& e) {
    if (inputs.empty() && !rest.empty()) inputs.push_back(rest);
    throw CommandError(e, cmd, inputs);
  }
}

}  // namespace monideal::cli
