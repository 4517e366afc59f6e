// Copyright 2026 The cyclohecke Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef CYCLOHECKE_DECOMP_HPP
#define CYCLOHECKE_DECOMP_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cyclohecke/dataset.hpp"
#include "cyclohecke/speceng.hpp"

namespace cyclohecke {

class WordBasisFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct WordBasis {
  int length = 0;
  std::vector<Word> words;
};

/// All words of length <= L, by length then lexicographically in generator order.
std::vector<Word> words_up_to(size_t generators, int max_length);
/// Minimal L whose words separate the generic characters.
WordBasis word_basis(const Dataset& ds, int cap = 12);
/// Rank of the generic character matrix on the given words, certified by
/// evaluation at rational points (a lower bound that is exact once full).
size_t generic_character_rank(const Dataset& ds, const std::vector<Word>& words);

/// Row i holds the traces of representation i on every word.
std::vector<CycVector> character_vectors(const std::vector<std::vector<CycMatrix>>& reps,
                                         const std::vector<Word>& words);

std::vector<CycVector> eigenspace(const CycMatrix& m, const Cyclotomic& lambda);

struct InvariantLine {
  CycVector vector;
  CycVector eigenvalues;  // one per matrix
};

/// Simultaneous eigenvectors with eigenvalues from the allowed lists; one
/// basis of each joint eigenspace.
std::vector<InvariantLine> common_invariant_line(const std::vector<CycMatrix>& mats,
                                                 const std::vector<std::vector<Cyclotomic>>& allowed);

enum class NNStatus { ok, dependent_basis, no_field_solution, non_integer, negative };
const char* to_string(NNStatus s);

struct NNResult {
  NNStatus status = NNStatus::no_field_solution;
  std::vector<Integer> coeffs;
  bool ok() const { return status == NNStatus::ok; }
};

NNResult nnint_decompose(const CycVector& target, const std::vector<CycVector>& basis);

enum class Verdict { irreducible, reducible, undetermined };
enum class Reason { none, defect_zero, dim_one, dim_two_no_invariant_line, search_hypothesis_verified };
const char* to_string(Verdict v);
const char* to_string(Reason r);

struct Certificate {
  Verdict verdict = Verdict::undetermined;
  Reason reason = Reason::none;
  std::optional<InvariantLine> line;  // reducible via an invariant line
  std::vector<long> row;              // reducible via an N-decomposition
};

struct DecompositionMatrix {
  std::string group;
  Specialization spec;
  std::vector<size_t> rows;     // dataset indices
  std::vector<size_t> columns;  // dataset index of each column's lift
  std::vector<std::vector<long>> entries;  // entries[row][column]
  std::vector<Certificate> certificates;   // per row
  std::vector<bool> defect_zero;           // per row
  std::vector<std::vector<size_t>> classes;  // equal modular reductions
  WordBasis word_basis;
  size_t modular_rank = 0;
  bool determined = true;
  std::vector<std::vector<size_t>> candidates;  // surviving hypotheses (lift indices)
  std::vector<std::string> notes;

  size_t row_of(size_t label_index) const;
  std::optional<size_t> column_of(size_t label_index) const;
};

struct DecompOptions {
  int words_maxlen = 12;
  std::optional<LaurentPoly> P;  // default: lcm of the Schur elements
  bool use_lambda = true;
};

DecompositionMatrix decomposition_matrix(const Dataset& ds, const Specialization& spec,
                                         const DecompOptions& opts = {});

/// Re-checks a Reducible witness of the given row.
bool reverify_certificate(const Dataset& ds, const DecompositionMatrix& dm, size_t row);

}  // namespace cyclohecke

#endif
