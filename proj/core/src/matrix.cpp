// Copyright 2026 The cyclohecke Authors
// SPDX-License-Identifier: Apache-2.0

#include "cyclohecke/matrix.hpp"

namespace cyclohecke {

std::vector<size_t> rref(CycMatrix& m) {
  std::vector<size_t> pivots;
  size_t row = 0;
  for (size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    size_t p = row;
    while (p < m.rows() && m(p, col).is_zero()) ++p;
    if (p == m.rows()) continue;
    if (p != row)
      for (size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(row, j));
    Cyclotomic iv = m(row, col).inv();
    for (size_t j = col; j < m.cols(); ++j)
      if (!m(row, j).is_zero()) m(row, j) *= iv;
    for (size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col).is_zero()) continue;
      Cyclotomic f = m(r, col);
      for (size_t j = col; j < m.cols(); ++j)
        if (!m(row, j).is_zero()) m(r, j) -= f * m(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

size_t rank(CycMatrix m) { return rref(m).size(); }

std::vector<CycVector> nullspace(const CycMatrix& m) {
  CycMatrix e = m;
  auto pivots = rref(e);
  std::vector<bool> is_pivot(m.cols(), false);
  for (size_t p : pivots) is_pivot[p] = true;
  std::vector<CycVector> basis;
  for (size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    CycVector v(m.cols());
    v[free] = Cyclotomic(1);
    for (size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -e(i, free);
    // Normalize to a leading 1.
    size_t lead = 0;
    while (v[lead].is_zero()) ++lead;
    Cyclotomic iv = v[lead].inv();
    for (auto& x : v)
      if (!x.is_zero()) x *= iv;
    basis.push_back(std::move(v));
  }
  return basis;
}

bool is_scalar_matrix(const CycMatrix& m, Cyclotomic* scalar) {
  if (m.rows() != m.cols() || m.rows() == 0) return false;
  for (size_t i = 0; i < m.rows(); ++i)
    for (size_t j = 0; j < m.cols(); ++j) {
      if (i == j) {
        if (m(i, i) != m(0, 0)) return false;
      } else if (!m(i, j).is_zero()) {
        return false;
      }
    }
  if (scalar) *scalar = m(0, 0);
  return true;
}

}  // namespace cyclohecke
