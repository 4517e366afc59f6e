// Copyright 2026 The cyclohecke Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef CYCLOHECKE_DATASET_HPP
#define CYCLOHECKE_DATASET_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cyclohecke/laurent.hpp"
#include "cyclohecke/matrix.hpp"
#include "cyclohecke/serialize.hpp"

namespace cyclohecke {

using LpMatrix = Matrix<LaurentPoly>;
/// A word in the generators, as generator indices.
using Word = std::vector<int>;

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class LabelMismatch : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UnknownSymbol : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct GroupSpec {
  std::string name;
  std::vector<std::string> generators;
  std::vector<std::vector<Word>> braid_relations;
  std::vector<std::vector<LaurentPoly>> parameters;  // per generator, in q
  long mu_order = 1;
  std::vector<Word> central_candidates;
  std::optional<std::string> poincare_label;
};

struct IrrChar {
  std::string label;
  int dim = 0;
  int b = 0;
};

struct Representation {
  std::string label;
  std::vector<LpMatrix> matrices;  // one per generator
  int dim() const { return matrices.empty() ? 0 : static_cast<int>(matrices[0].rows()); }
};

/// One group's data. characters, representations and schur share an index.
struct Dataset {
  GroupSpec group;
  std::vector<IrrChar> characters;
  std::vector<Representation> representations;
  std::vector<LaurentPoly> schur;
  std::string source;

  size_t size() const { return characters.size(); }
  /// Index of a label; throws LabelMismatch.
  size_t index_of(const std::string& label) const;
  const std::string& label(size_t i) const { return characters[i].label; }
};

Dataset load_dataset(const std::string& path);
Dataset parse_dataset(const Json& j, const std::string& source = "<memory>");
Json dataset_to_json(const Dataset& ds);

Word parse_word(const GroupSpec& g, const std::vector<std::string>& symbols);
std::string word_to_string(const GroupSpec& g, const Word& w);

LpMatrix eval_word(const Representation& rep, const Word& word);
LpMatrix eval_word(const GroupSpec& g, const Representation& rep,
                   const std::vector<std::string>& symbols);
LaurentPoly char_value(const Representation& rep, const Word& word);

struct ValidationEntry {
  std::string check;  // "a", "b", "c" or "d"
  std::string subject;
  bool passed = false;
  std::string detail;
};

struct ValidationReport {
  std::vector<ValidationEntry> entries;
  bool passed() const;
  std::vector<ValidationEntry> failures() const;
};

/// (a) braid relations, (b) deformation polynomials, (c) trace at identity,
/// (d) sum of dim/s equal to 1.
ValidationReport validate_dataset(const Dataset& ds);

}  // namespace cyclohecke

#endif
