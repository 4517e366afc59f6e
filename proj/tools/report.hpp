// Copyright 2026 The cyclohecke Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef CYCLOHECKE_TOOLS_REPORT_HPP
#define CYCLOHECKE_TOOLS_REPORT_HPP

#include <optional>
#include <string>
#include <vector>

#include "cyclohecke/basicsets.hpp"

namespace cyclohecke::tools {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class PChoice { lcm, poincare };

struct RunOptions {
  int words_maxlen = 12;
  bool use_lambda = true;
  PChoice p = PChoice::lcm;
};

struct RunReport {
  Specialization spec;
  SpecReport spec_report;
  AValueTable a_values;
  std::vector<Cyclotomic> degree_values;  // D^P at xi
  std::string p_choice;
  DecompositionMatrix dm;
  BlockPartition blocks;
  std::vector<bool> lemma_gr;
  BasicSetReport basic_sets;
  std::optional<ConjectureReport> conjectures;  // absent when semisimple
  std::optional<double> seconds;
};

LaurentPoly choose_P(const Dataset& ds, PChoice p);
RunReport run_specialization(const Dataset& ds, const Specialization& spec, const RunOptions& opts);

Json report_to_json(const Dataset& ds, const RunReport& r);
Json blocks_to_json(const Dataset& ds, const RunReport& r);
Json basic_sets_to_json(const Dataset& ds, const RunReport& r);
Json conjectures_to_json(const Dataset& ds, const RunReport& r);
Json validation_to_json(const Dataset& ds, const ValidationReport& v);

/// Matrix with rows grouped by block and blocks separated by rules.
std::string render_matrix(const Dataset& ds, const RunReport& r);
std::string report_to_text(const Dataset& ds, const RunReport& r);
std::string blocks_to_text(const Dataset& ds, const RunReport& r);
std::string basic_sets_to_text(const Dataset& ds, const RunReport& r);
std::string conjectures_to_text(const Dataset& ds, const RunReport& r);

/// Row order of the text rendering: blocks in column order, rows within a
/// block by (a-value, first nonzero column, data order).
std::vector<size_t> display_row_order(const RunReport& r);

/// Dataset files (*.json) directly inside dir, sorted by name.
std::vector<std::string> dataset_files(const std::string& dir);
Dataset load_group(const std::string& dir, const std::string& group);

struct GoldenBlock {
  std::vector<std::string> members;
  std::string shape;  // i, ii, iii, iv, v or paren
};

struct GoldenRecord {
  std::string group;
  long q_order = 1;
  std::optional<std::string> q_value_hint;
  std::vector<GoldenBlock> blocks;
  std::string optimal_set_note;
};

std::vector<GoldenRecord> parse_golden(const Json& j);
std::vector<GoldenRecord> load_golden(const std::string& path);
std::string golden_q_spec(const GoldenRecord& g);

struct GoldenOutcome {
  bool pass = true;
  std::vector<std::string> mismatches;
};

/// Compares one record against a computed report: block memberships (lifts
/// in data order), shape tags unless paren, coverage of every nontrivial
/// block, and the optimal basic set.
GoldenOutcome compare_golden(const Dataset& ds, const RunReport& r, const GoldenRecord& g);

}  // namespace cyclohecke::tools

#endif
