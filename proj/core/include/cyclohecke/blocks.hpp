// Copyright 2026 The cyclohecke Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef CYCLOHECKE_BLOCKS_HPP
#define CYCLOHECKE_BLOCKS_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "cyclohecke/decomp.hpp"

namespace cyclohecke {

class NonScalar : public std::runtime_error {
 public:
  explicit NonScalar(const std::string& label)
      : std::runtime_error("central word does not act by a scalar on " + label), label_(label) {}
  const std::string& label() const { return label_; }

 private:
  std::string label_;
};

enum class ShapeTag { i, ii, iii, iv, v, defect_zero_singleton, other };
const char* to_string(ShapeTag t);
ShapeTag shape_from_string(const std::string& s);

struct BlockPartition {
  std::vector<std::vector<size_t>> blocks;   // dataset indices, data order
  std::vector<std::vector<size_t>> columns;  // column positions in the matrix
  std::vector<ShapeTag> shape_tags;
};

struct LambdaTable {
  Word word;
  std::vector<LaurentPoly> values;  // per character
};

bool verify_central(const Dataset& ds, const Word& word);
LambdaTable lambda_table(const Dataset& ds, const Word& word);
/// Non-defect-zero labels grouped by the specialized value of lambda.
std::vector<std::vector<size_t>> lambda_partition(const Dataset& ds, const Specialization& spec,
                                                  const Word& word);
std::vector<std::vector<size_t>> lambda_partition(const Dataset& ds, const Specialization& spec,
                                                  const LambdaTable& table);

BlockPartition block_partition(const DecompositionMatrix& dm);
/// Row-column connected components of a plain entry matrix.
std::vector<std::vector<size_t>> connected_rows(const std::vector<std::vector<long>>& entries,
                                                std::vector<std::vector<size_t>>* columns = nullptr);
/// Matches a block (rows x columns) against the displays (i)-(v) up to
/// row and column permutations.
ShapeTag classify_shape(const std::vector<std::vector<long>>& block);
std::vector<std::vector<long>> shape_pattern(ShapeTag t);

}  // namespace cyclohecke

#endif
