// Copyright 2026 The hicone Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <optional>
#include <vector>

#include "hicone/error.hpp"
#include "hicone/field.hpp"
#include "hicone/polynomial.hpp"

namespace hicone {

/// Dense row-major matrix over a field.
template <FieldElement K>
class Matrix {
 public:
  using Field = typename K::field_type;

  Matrix(int rows, int cols, Field field)
      : rows_(rows), cols_(cols), field_(field), a_(static_cast<std::size_t>(rows) * cols, field.zero()) {}

  static Matrix identity(int n, Field field) {
    Matrix m(n, n, field);
    for (int i = 0; i < n; ++i) m(i, i) = field.one();
    return m;
  }

  int rows() const noexcept { return rows_; }
  int cols() const noexcept { return cols_; }
  const Field& field() const noexcept { return field_; }
  K& operator()(int r, int c) { return a_[static_cast<std::size_t>(r) * cols_ + c]; }
  const K& operator()(int r, int c) const { return a_[static_cast<std::size_t>(r) * cols_ + c]; }

  std::vector<K> column(int c) const {
    std::vector<K> v;
    for (int r = 0; r < rows_; ++r) v.push_back((*this)(r, c));
    return v;
  }

  Matrix operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw DomainError("matrix shape mismatch");
    Matrix out(rows_, o.cols_, field_);
    for (int i = 0; i < rows_; ++i) {
      for (int k = 0; k < cols_; ++k) {
        const K& x = (*this)(i, k);
        if (x.is_zero()) continue;
        for (int j = 0; j < o.cols_; ++j) out(i, j) += x * o(k, j);
      }
    }
    return out;
  }

  std::vector<K> apply(const std::vector<K>& v) const {
    if (static_cast<int>(v.size()) != cols_) throw DomainError("matrix-vector shape mismatch");
    std::vector<K> out(rows_, field_.zero());
    for (int i = 0; i < rows_; ++i) {
      for (int j = 0; j < cols_; ++j) out[i] += (*this)(i, j) * v[j];
    }
    return out;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }

  /// Reduced row echelon form in place; returns the pivot columns.
  std::vector<int> rref() {
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < cols_ && r < rows_; ++c) {
      int p = r;
      while (p < rows_ && (*this)(p, c).is_zero()) ++p;
      if (p == rows_) continue;
      if (p != r) {
        for (int j = 0; j < cols_; ++j) std::swap((*this)(p, j), (*this)(r, j));
      }
      K inv = (*this)(r, c).inverse();
      for (int j = c; j < cols_; ++j) (*this)(r, j) = (*this)(r, j) * inv;
      for (int i = 0; i < rows_; ++i) {
        if (i == r || (*this)(i, c).is_zero()) continue;
        K f = (*this)(i, c);
        for (int j = c; j < cols_; ++j) (*this)(i, j) -= f * (*this)(r, j);
      }
      pivots.push_back(c);
      ++r;
    }
    return pivots;
  }

  int rank() const {
    Matrix m = *this;
    return static_cast<int>(m.rref().size());
  }

  /// Inverse of a square matrix; unset when singular.
  std::optional<Matrix> inverse() const {
    if (rows_ != cols_) throw DomainError("inverse of a non-square matrix");
    Matrix aug(rows_, 2 * cols_, field_);
    for (int i = 0; i < rows_; ++i) {
      for (int j = 0; j < cols_; ++j) aug(i, j) = (*this)(i, j);
      aug(i, cols_ + i) = field_.one();
    }
    auto piv = aug.rref();
    if (static_cast<int>(piv.size()) < rows_ || piv[rows_ - 1] >= cols_) return std::nullopt;
    Matrix out(rows_, cols_, field_);
    for (int i = 0; i < rows_; ++i) {
      for (int j = 0; j < cols_; ++j) out(i, j) = aug(i, cols_ + j);
    }
    return out;
  }

  /// A solution x of (*this) x = b, if one exists.
  std::optional<std::vector<K>> solve(const std::vector<K>& b) const {
    if (static_cast<int>(b.size()) != rows_) throw DomainError("right-hand side shape mismatch");
    Matrix aug(rows_, cols_ + 1, field_);
    for (int i = 0; i < rows_; ++i) {
      for (int j = 0; j < cols_; ++j) aug(i, j) = (*this)(i, j);
      aug(i, cols_) = b[i];
    }
    auto piv = aug.rref();
    if (!piv.empty() && piv.back() == cols_) return std::nullopt;
    std::vector<K> x(cols_, field_.zero());
    for (std::size_t r = 0; r < piv.size(); ++r) x[piv[r]] = aug(static_cast<int>(r), cols_);
    return x;
  }

  /// Basis of the right kernel.
  std::vector<std::vector<K>> kernel() const {
    Matrix m = *this;
    auto piv = m.rref();
    std::vector<bool> is_pivot(cols_, false);
    for (int c : piv) is_pivot[c] = true;
    std::vector<std::vector<K>> basis;
    for (int f = 0; f < cols_; ++f) {
      if (is_pivot[f]) continue;
      std::vector<K> v(cols_, field_.zero());
      v[f] = field_.one();
      for (std::size_t r = 0; r < piv.size(); ++r) v[piv[r]] = -m(static_cast<int>(r), f);
      basis.push_back(std::move(v));
    }
    return basis;
  }

 private:
  int rows_;
  int cols_;
  Field field_;
  std::vector<K> a_;
};

/// f(M y): substitutes x_i -> sum_j M(i, j) y_j. M may be rectangular, in
/// which case the result lives in M.cols() variables.
template <FieldElement K>
Polynomial<K> compose_linear(const Polynomial<K>& f, const Matrix<K>& m) {
  if (m.rows() != f.nvars() || m.cols() < 1) {
    throw DomainError("compose_linear: matrix must have nvars rows");
  }
  std::vector<Polynomial<K>> images;
  for (int i = 0; i < m.rows(); ++i) {
    std::vector<K> row;
    for (int j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    images.push_back(Polynomial<K>::linear_form(f.field(), row));
  }
  return f.substitute(images);
}

}  // namespace hicone
