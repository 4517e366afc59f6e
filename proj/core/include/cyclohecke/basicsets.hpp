// Copyright 2026 The cyclohecke Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef CYCLOHECKE_BASICSETS_HPP
#define CYCLOHECKE_BASICSETS_HPP

#include <optional>
#include <string>
#include <vector>

#include "cyclohecke/blocks.hpp"
#include "cyclohecke/decomp.hpp"

namespace cyclohecke {

struct AValueTable {
  std::vector<Rational> values;  // per character
};

AValueTable a_values(const Dataset& ds);

/// Least common multiple of all Schur elements (monic, no monomial factor).
LaurentPoly lcm_P(const Dataset& ds);
/// Schur element of the label marked as Poincare polynomial; throws if unmarked.
LaurentPoly poincare_P(const Dataset& ds);
/// P(q)/s_chi for every character; InexactDivision names the label.
std::vector<LaurentPoly> generic_degrees(const Dataset& ds, const LaurentPoly& P);

/// Per column: sum over rows of d * value == 0. values are indexed like rows.
std::vector<bool> lemma_gr_columns(const std::vector<std::vector<long>>& entries,
                                   const std::vector<Cyclotomic>& values);
std::vector<bool> lemma_gr_check(const DecompositionMatrix& dm, const std::vector<LaurentPoly>& degrees,
                                 const Specialization& spec);

struct BasicSet {
  std::vector<size_t> members;          // dataset indices, data order
  std::vector<size_t> column_to_label;  // dataset index per column
};

struct BasicSetReport {
  std::optional<BasicSet> canonical;
  std::optional<BasicSet> optimal;
  std::vector<std::string> notes;
};

std::optional<BasicSet> canonical_basic_set(const DecompositionMatrix& dm, const AValueTable& av,
                                            std::vector<std::string>* notes = nullptr);
std::optional<BasicSet> optimal_basic_set(const DecompositionMatrix& dm, const AValueTable& av,
                                          std::vector<std::string>* notes = nullptr);
BasicSetReport basic_set_report(const DecompositionMatrix& dm, const AValueTable& av);

struct Conj1Entry {
  size_t column = 0;
  long order_sum = -1;  // -1 when the sum is the zero polynomial
  long order_P = 0;
  bool pass = false;
};

struct Conj2Entry {
  size_t label = 0;
  std::optional<Cyclotomic> ratio;  // absent when the limit is 0 or infinite
  bool real = false;
  bool rational = false;
  int sign = 0;
  int ell_mod2 = 0;
};

struct Conj2Block {
  std::vector<size_t> members;
  size_t chi_b = 0;
  bool tie = false;
  std::vector<Conj2Entry> entries;
  std::vector<size_t> b_plus;
  std::vector<size_t> b_minus;
  bool pass = false;
};

struct ConjectureReport {
  std::vector<Conj1Entry> conj1;
  std::vector<Conj2Block> conj2;
  bool conj1_pass = true;
  bool conj2_pass = true;
};

ConjectureReport conjecture_audit(const Dataset& ds, const DecompositionMatrix& dm,
                                  const Specialization& spec, const LaurentPoly& P);

}  // namespace cyclohecke

#endif
