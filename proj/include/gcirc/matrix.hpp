/*******************************************************************************
 * Copyright 2026 The gcirc Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *   http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 ******************************************************************************/
#pragma once

/**
 * @file matrix.hpp
 * @brief Dense matrices over GF(2^m) with exact determinant and inverse.
 *
 * Matrices are values: every operation returns a fresh matrix. Both
 * determinant and inverse run Gaussian elimination taking the first nonzero
 * pivot down the column; in characteristic 2 a row swap does not change the
 * sign of the determinant.
 */

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "gcirc/field.hpp"

namespace gcirc {

inline constexpr std::size_t kMaxDimension = 64;

class Matrix {
 public:
  Matrix(FieldPtr field, std::size_t rows, std::size_t cols);

  static Matrix identity(FieldPtr field, std::size_t k);
  static Matrix from_rows(FieldPtr field, const std::vector<std::vector<Element>>& rows);
  static Matrix diagonal(FieldPtr field, std::span<const Element> diag);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  const Field& field() const noexcept { return *field_; }
  const FieldPtr& field_ptr() const noexcept { return field_; }

  Element operator()(std::size_t i, std::size_t j) const noexcept { return data_[i * cols_ + j]; }
  Element& operator()(std::size_t i, std::size_t j) noexcept { return data_[i * cols_ + j]; }

  std::span<const Element> row(std::size_t i) const noexcept {
    return {data_.data() + i * cols_, cols_};
  }
  std::span<const Element> entries() const noexcept { return data_; }

  bool is_identity() const noexcept;

  friend bool operator==(const Matrix& a, const Matrix& b) noexcept;

 private:
  FieldPtr field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Element> data_;
};

/// DIM_MISMATCH unless a.cols() == b.rows() and both share a field.
Matrix multiply(const Matrix& a, const Matrix& b);
Matrix transpose(const Matrix& a);
Matrix add(const Matrix& a, const Matrix& b);
Matrix scale(const Matrix& a, Element s);

inline Matrix operator*(const Matrix& a, const Matrix& b) { return multiply(a, b); }
inline Matrix operator+(const Matrix& a, const Matrix& b) { return add(a, b); }
inline Matrix operator*(Element s, const Matrix& a) { return scale(a, s); }

Element determinant(const Matrix& a);
/// Gauss-Jordan on [A | I]; SINGULAR when det(A) = 0.
Matrix inverse(const Matrix& a);

/// Minor selected by strictly increasing index lists; BAD_INDEX otherwise.
Matrix submatrix(const Matrix& a, std::span<const std::size_t> row_idx,
                 std::span<const std::size_t> col_idx);

/// Determinant of a square block given as row-major scratch storage; the
/// buffer is destroyed. Used by minor enumeration to avoid allocations.
Element determinant_in_place(const Field& f, std::span<Element> block, std::size_t n);

/// A bijection on {0..k-1}; images[i] = sigma(i).
class Permutation {
 public:
  explicit Permutation(std::vector<std::size_t> images);
  static Permutation identity(std::size_t k);

  std::size_t size() const noexcept { return images_.size(); }
  std::size_t operator()(std::size_t i) const noexcept { return images_[i]; }
  const std::vector<std::size_t>& images() const noexcept { return images_; }

  /// True iff the orbit of 0 has length size().
  bool is_full_cycle() const noexcept;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<std::size_t> images_;
};

/// (p o q)(i) = p(q(i)).
Permutation compose(const Permutation& p, const Permutation& q);
Permutation inverse(const Permutation& p);
Permutation power(const Permutation& p, std::int64_t e);

/// M[p(j)][j] = 1, so M(p) * M(q) = M(p o q).
Matrix to_matrix(FieldPtr field, const Permutation& p);

}  // namespace gcirc
