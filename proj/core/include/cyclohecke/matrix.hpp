// Copyright 2026 The cyclohecke Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef CYCLOHECKE_MATRIX_HPP
#define CYCLOHECKE_MATRIX_HPP

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "cyclohecke/cyclotomic.hpp"

namespace cyclohecke {

/// Dense row-major matrix over a ring T.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(size_t rows, size_t cols, const T& fill = T()) : r_(rows), c_(cols), a_(rows * cols, fill) {}

  static Matrix identity(size_t n, const T& one, const T& zero) {
    Matrix m(n, n, zero);
    for (size_t i = 0; i < n; ++i) m(i, i) = one;
    return m;
  }

  size_t rows() const { return r_; }
  size_t cols() const { return c_; }
  T& operator()(size_t i, size_t j) { return a_[i * c_ + j]; }
  const T& operator()(size_t i, size_t j) const { return a_[i * c_ + j]; }

  Matrix operator*(const Matrix& o) const {
    if (c_ != o.r_) throw std::invalid_argument("matrix dimension mismatch");
    Matrix m(r_, o.c_, zero_like());
    for (size_t i = 0; i < r_; ++i)
      for (size_t k = 0; k < c_; ++k) {
        const T& x = (*this)(i, k);
        if (is_zero_value(x)) continue;
        for (size_t j = 0; j < o.c_; ++j) m(i, j) += x * o(k, j);
      }
    return m;
  }

  Matrix operator-(const Matrix& o) const {
    Matrix m = *this;
    for (size_t i = 0; i < a_.size(); ++i) m.a_[i] -= o.a_[i];
    return m;
  }

  Matrix transposed() const {
    Matrix m(c_, r_, zero_like());
    for (size_t i = 0; i < r_; ++i)
      for (size_t j = 0; j < c_; ++j) m(j, i) = (*this)(i, j);
    return m;
  }

  bool operator==(const Matrix& o) const { return r_ == o.r_ && c_ == o.c_ && a_ == o.a_; }
  bool operator!=(const Matrix& o) const { return !(*this == o); }

  T trace() const {
    T t = zero_like();
    for (size_t i = 0; i < r_ && i < c_; ++i) t += (*this)(i, i);
    return t;
  }

  template <class F>
  auto map(F&& f) const -> Matrix<decltype(f(std::declval<const T&>()))> {
    Matrix<decltype(f(std::declval<const T&>()))> m(r_, c_);
    for (size_t i = 0; i < r_; ++i)
      for (size_t j = 0; j < c_; ++j) m(i, j) = f((*this)(i, j));
    return m;
  }

 private:
  T zero_like() const {
    if (a_.empty()) return T();
    T z = a_[0];
    z -= a_[0];
    return z;
  }
  static bool is_zero_value(const T& x) {
    if constexpr (requires { x.is_zero(); }) {
      return x.is_zero();
    } else {
      return x == T();
    }
  }

  size_t r_ = 0;
  size_t c_ = 0;
  std::vector<T> a_;
};

using CycMatrix = Matrix<Cyclotomic>;
using CycVector = std::vector<Cyclotomic>;

/// Reduced row echelon form in place; returns the pivot columns.
std::vector<size_t> rref(CycMatrix& m);
size_t rank(CycMatrix m);
/// Basis of {v : m v = 0}, each vector normalized to have first nonzero entry 1.
std::vector<CycVector> nullspace(const CycMatrix& m);
bool is_scalar_matrix(const CycMatrix& m, Cyclotomic* scalar = nullptr);

}  // namespace cyclohecke

#endif
