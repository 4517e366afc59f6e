// Copyright 2026 The cyclohecke Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef CYCLOHECKE_SERIALIZE_HPP
#define CYCLOHECKE_SERIALIZE_HPP

#include <stdexcept>
#include <string>

#include <nlohmann/json.hpp>

#include "cyclohecke/cyclotomic.hpp"
#include "cyclohecke/laurent.hpp"

namespace cyclohecke {

using Json = nlohmann::ordered_json;

class SchemaError : public std::runtime_error {
 public:
  SchemaError(const std::string& where, const std::string& what)
      : std::runtime_error(where + ": " + what), where_(where) {}
  const std::string& where() const { return where_; }

 private:
  std::string where_;
};

/// {"order": n, "coeffs": {"e": "p/q"}} or a bare "p/q" string (or integer).
Cyclotomic cyclotomic_from_json(const Json& j, const std::string& where = "$");
Json cyclotomic_to_json(const Cyclotomic& c);

/// {"var", "terms"} or factored {"var", "unit", "monomial", "factors"}.
LaurentPoly laurent_from_json(const Json& j, const std::string& where = "$");
Json laurent_to_json(const LaurentPoly& p);

}  // namespace cyclohecke

#endif
