#pragma once

// Ideal expressions:
//
//   expr   := term ('+' term)*                 sum of ideals
//   term   := factor ('*' factor)*             plain product
//   factor := atom ('^' INT)*
//   atom   := '(' expr (',' expr)* ')'         ideal generated by the items
//           | FUNC '(' expr (',' expr)* ')'    closure, star, colon, cap
//           | VAR | 'm' | NAME | '1'
//
// A product of variables stays a monomial; anything else is an ideal.

#include <cctype>
#include <cstddef>
#include <functional>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include "monideal/cli/names.hpp"
#include "monideal/newton.hpp"

namespace monideal::cli {

using Bindings = std::map<std::string, MonomialIdeal>;

inline constexpr Exponent kMaxLiteralExponent = Exponent{1} << 31;

class ExpressionParser {
 public:
  ExpressionParser(std::string_view text, const VariableNames& vars, const Bindings* bindings = nullptr)
      : text_(text), vars_(vars), bindings_(bindings) {}

  std::size_t position() const noexcept { return pos_; }
  bool at_end() {
    skip_ws();
    return pos_ >= text_.size();
  }

  /// Parses one expression starting at the current position and stops at
  /// the first token that cannot continue it.
  MonomialIdeal parse_ideal() { return to_ideal(parse_expr()); }

 private:
  using Value = std::variant<ExponentVector, MonomialIdeal>;

  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorKind::Parse, "parse_ideal", what + " at position " + std::to_string(pos_));
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  std::string ident() {
    skip_ws();
    std::size_t b = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      ++pos_;
    return std::string(text_.substr(b, pos_ - b));
  }

  Exponent integer() {
    skip_ws();
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) fail("expected integer");
    Exponent v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + (text_[pos_++] - '0');
      if (v > kMaxLiteralExponent)
        throw Error(ErrorKind::Overflow, "parse_ideal", "exponent too large at position " + std::to_string(pos_));
    }
    return v;
  }

  MonomialIdeal to_ideal(const Value& v) const {
    if (auto* m = std::get_if<ExponentVector>(&v)) return MonomialIdeal::minimalize({*m});
    return std::get<MonomialIdeal>(v);
  }

  Value parse_expr() {
    Value v = parse_term();
    while (peek() == '+') {
      ++pos_;
      Value r = parse_term();
      v = sum(to_ideal(v), to_ideal(r));
    }
    return v;
  }

  Value parse_term() {
    Value v = parse_factor();
    while (peek() == '*') {
      ++pos_;
      Value r = parse_factor();
      auto* a = std::get_if<ExponentVector>(&v);
      auto* b = std::get_if<ExponentVector>(&r);
      if (a && b) v = *a + *b;
      else v = product(to_ideal(v), to_ideal(r));
    }
    return v;
  }

  Value parse_factor() {
    Value v = parse_atom();
    while (peek() == '^') {
      ++pos_;
      Exponent k = integer();
      if (auto* a = std::get_if<ExponentVector>(&v)) {
        for (auto e : a->exps())
          if (e != 0 && e > kMaxLiteralExponent / std::max<Exponent>(k, 1))
            throw Error(ErrorKind::Overflow, "parse_ideal", "exponent too large");
        v = k * *a;
      } else {
        v = power(std::get<MonomialIdeal>(v), k);
      }
    }
    return v;
  }

  std::vector<Value> parse_list() {
    std::vector<Value> items;
    items.push_back(parse_expr());
    while (accept(',')) items.push_back(parse_expr());
    expect(')');
    return items;
  }

  Value parse_atom() {
    char c = peek();
    if (c == '(') {
      ++pos_;
      auto items = parse_list();
      if (items.size() == 1) return items.front();
      MonomialIdeal acc = to_ideal(items.front());
      for (std::size_t i = 1; i < items.size(); ++i) acc = sum(acc, to_ideal(items[i]));
      return acc;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t at = pos_;
      if (integer() != 1) {
        pos_ = at;
        fail("only the constant 1 is allowed");
      }
      return ExponentVector(vars_.dim());
    }
    if (!(std::isalpha(static_cast<unsigned char>(c)) || c == '_')) {
      if (c == '\0') fail("unexpected end of input");
      fail(std::string("unexpected '") + c + "'");
    }
    std::size_t at = pos_;
    std::string name = ident();
    if (auto i = vars_.find(name)) return ExponentVector::unit(vars_.dim(), *i);
    if (peek() == '(' && is_function(name)) {
      ++pos_;
      auto items = parse_list();
      return apply(name, items, at);
    }
    if (name == "m") return MonomialIdeal::maximal_power(vars_.dim(), 1);
    if (bindings_) {
      auto it = bindings_->find(name);
      if (it != bindings_->end()) {
        if (it->second.dim() != vars_.dim())
          throw Error(ErrorKind::DimensionMismatch, "parse_ideal", "binding '" + name + "' has another dimension");
        return it->second;
      }
    }
    pos_ = at;
    throw Error(ErrorKind::UnknownVariable, "parse_ideal",
                "unknown variable '" + name + "' at position " + std::to_string(at));
  }

  static bool is_function(const std::string& n) {
    return n == "closure" || n == "star" || n == "colon" || n == "cap";
  }

  Value apply(const std::string& f, const std::vector<Value>& args, std::size_t at) {
    auto arity = [&](std::size_t k) {
      if (args.size() != k) {
        pos_ = at;
        fail(f + " takes " + std::to_string(k) + " argument" + (k == 1 ? "" : "s"));
      }
    };
    if (f == "closure") {
      arity(1);
      return integral_closure(to_ideal(args[0]));
    }
    arity(2);
    auto a = to_ideal(args[0]), b = to_ideal(args[1]);
    if (f == "star") return star_product(a, b);
    if (f == "colon") return colon(a, b);
    return intersect(a, b);
  }

  std::string_view text_;
  const VariableNames& vars_;
  const Bindings* bindings_;
  std::size_t pos_ = 0;
};

/// Parses a whole string as one ideal expression.
inline MonomialIdeal parse_ideal(std::string_view text, const VariableNames& vars,
                                 const Bindings* bindings = nullptr) {
  ExpressionParser p(text, vars, bindings);
  auto I = p.parse_ideal();
  if (!p.at_end())
    throw Error(ErrorKind::Parse, "parse_ideal", "trailing input at position " + std::to_string(p.position()));
  return I;
}

}  // namespace monideal::cli
