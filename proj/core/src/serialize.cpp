// Copyright 2026 The cyclohecke Authors
// SPDX-License-Identifier: Apache-2.0

#include "cyclohecke/serialize.hpp"

#include <map>

namespace cyclohecke {

namespace {

long parse_long(const std::string& s, const std::string& where) {
  size_t used = 0;
  long v = 0;
  try {
    v = std::stol(s, &used);
  } catch (const std::exception&) {
    throw SchemaError(where, "expected an integer key, got '" + s + "'");
  }
  if (used != s.size()) throw SchemaError(where, "expected an integer key, got '" + s + "'");
  return v;
}

Rational rational_from_json(const Json& j, const std::string& where) {
  try {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return Rational(Integer(j.dump()));
  } catch (const std::exception& e) {
    throw SchemaError(where, e.what());
  }
  throw SchemaError(where, "expected a rational as \"p/q\"");
}

Var var_from_json(const Json& j, const std::string& where) {
  if (!j.contains("var")) return Var::q;
  const auto& v = j.at("var");
  if (v == "q") return Var::q;
  if (v == "y") return Var::y;
  throw SchemaError(where + ".var", "variable must be \"q\" or \"y\"");
}

}  // namespace

Cyclotomic cyclotomic_from_json(const Json& j, const std::string& where) {
  if (j.is_string() || j.is_number_integer()) return Cyclotomic(rational_from_json(j, where));
  if (!j.is_object() || !j.contains("order") || !j.contains("coeffs"))
    throw SchemaError(where, "expected {\"order\", \"coeffs\"} or \"p/q\"");
  const Json& ord = j.at("order");
  if (!ord.is_number_integer() || ord.get<long>() < 1)
    throw SchemaError(where + ".order", "order must be a positive integer");
  const Json& co = j.at("coeffs");
  if (!co.is_object()) throw SchemaError(where + ".coeffs", "expected an object");
  std::map<long, Rational> m;
  for (const auto& [k, v] : co.items()) {
    std::string w = where + ".coeffs." + k;
    m[parse_long(k, w)] += rational_from_json(v, w);
  }
  return Cyclotomic::from_exponents(ord.get<long>(), m);
}

Json cyclotomic_to_json(const Cyclotomic& c) {
  if (c.is_rational()) return rational_to_string(c.rational());
  Json co = Json::object();
  for (size_t e = 0; e < c.coeffs().size(); ++e)
    if (c.coeffs()[e] != 0) co[std::to_string(e)] = rational_to_string(c.coeffs()[e]);
  Json out = Json::object();
  out["order"] = c.order();
  out["coeffs"] = co;
  return out;
}

LaurentPoly laurent_from_json(const Json& j, const std::string& where) {
  if (j.is_string() || j.is_number_integer())
    return LaurentPoly::constant(cyclotomic_from_json(j, where));
  if (!j.is_object()) throw SchemaError(where, "expected a Laurent polynomial object");
  Var v = var_from_json(j, where);
  if (j.contains("terms")) {
    const Json& t = j.at("terms");
    if (!t.is_object()) throw SchemaError(where + ".terms", "expected an object");
    LaurentPoly::Terms terms;
    for (const auto& [k, c] : t.items()) {
      std::string w = where + ".terms." + k;
      terms[parse_long(k, w)] += cyclotomic_from_json(c, w);
    }
    return LaurentPoly(v, std::move(terms));
  }
  if (j.contains("factors")) {
    Cyclotomic unit = j.contains("unit") ? cyclotomic_from_json(j.at("unit"), where + ".unit")
                                         : Cyclotomic(1);
    long mono = 0;
    if (j.contains("monomial")) {
      if (!j.at("monomial").is_number_integer())
        throw SchemaError(where + ".monomial", "expected an integer");
      mono = j.at("monomial").get<long>();
    }
    LaurentPoly p = LaurentPoly::monomial(unit, mono, v);
    const Json& fs = j.at("factors");
    if (!fs.is_array()) throw SchemaError(where + ".factors", "expected an array");
    for (size_t i = 0; i < fs.size(); ++i) {
      std::string w = where + ".factors[" + std::to_string(i) + "]";
      const Json& f = fs[i];
      if (!f.is_array() || f.size() != 2 || !f[1].is_number_integer() || f[1].get<long>() < 0)
        throw SchemaError(w, "expected [polynomial, multiplicity]");
      LaurentPoly base = laurent_from_json(f[0], w + "[0]");
      if (base.var() != v) throw SchemaError(w, "factor variable differs from the product");
      p *= base.pow(f[1].get<long>());
    }
    return p;
  }
  throw SchemaError(where, "expected \"terms\" or \"factors\"");
}

Json laurent_to_json(const LaurentPoly& p) {
  Json t = Json::object();
  for (const auto& [e, c] : p.terms()) t[std::to_string(e)] = cyclotomic_to_json(c);
  Json out = Json::object();
  out["var"] = std::string(1, static_cast<char>(p.var()));
  out["terms"] = t;
  return out;
}

}  // namespace cyclohecke
