#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "monideal/cli/names.hpp"

namespace monideal::cli {

using json = nlohmann::json;

/// {"dim": d, "vars": [...], "gens": [[...], ...]} with gens in canonical
/// (lexicographic) order.
inline json serialize(const MonomialIdeal& I, const VariableNames& vars) {
  if (vars.dim() != I.dim())
    throw Error(ErrorKind::DimensionMismatch, "serialize", "variable list does not match the ideal");
  json gens = json::array();
  for (const auto& g : I.gens()) gens.push_back(g.vec());
  return {{"dim", I.dim()}, {"vars", vars.names()}, {"gens", std::move(gens)}};
}

inline std::string serialize_text(const MonomialIdeal& I, const VariableNames& vars) {
  return serialize(I, vars).dump();
}

/// Inverse of serialize. When `expected` is given the document's variables
/// must match it.
inline MonomialIdeal deserialize(const json& doc, const VariableNames* expected = nullptr) {
  const char* op = "deserialize";
  auto bad = [&](const std::string& why) { return Error(ErrorKind::Malformed, op, why); };
  if (!doc.is_object()) throw bad("expected an object");
  for (const char* key : {"dim", "vars", "gens"})
    if (!doc.contains(key)) throw bad(std::string("missing field '") + key + "'");
  if (!doc["dim"].is_number_integer() || doc["dim"].get<long long>() < 2) throw bad("'dim' must be an integer >= 2");
  const auto d = static_cast<std::size_t>(doc["dim"].get<long long>());
  if (!doc["vars"].is_array() || doc["vars"].size() != d) throw bad("'vars' must list dim names");
  std::vector<std::string> names;
  for (const auto& n : doc["vars"]) {
    if (!n.is_string()) throw bad("variable names must be strings");
    names.push_back(n.get<std::string>());
  }
  VariableNames vars(names);
  if (expected && expected->names() != vars.names())
    throw Error(ErrorKind::DimensionMismatch, op, "document variables differ from the session variables");
  if (!doc["gens"].is_array() || doc["gens"].empty()) throw bad("'gens' must be a nonempty array");
  std::vector<ExponentVector> gens;
  for (const auto& row : doc["gens"]) {
    if (!row.is_array() || row.size() != d) throw bad("every generator must have dim entries");
    std::vector<Exponent> e;
    for (const auto& x : row) {
      if (!x.is_number_integer() || x.get<long long>() < 0) throw bad("exponents must be nonnegative integers");
      e.push_back(x.get<Exponent>());
    }
    gens.emplace_back(std::move(e));
  }
  return MonomialIdeal::minimalize(std::move(gens));
}

inline MonomialIdeal deserialize_text(const std::string& text, const VariableNames* expected = nullptr) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::Malformed, "deserialize", e.what());
  }
  return deserialize(doc, expected);
}

}  // namespace monideal::cli
