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
#include "gcirc/matrix.hpp"

#include <string>
#include <utility>

#include "gcirc/error.hpp"

namespace gcirc {

namespace {

std::string dims(const Matrix& a) {
  return std::to_string(a.rows()) + "x" + std::to_string(a.cols());
}

void require_same_field(const Matrix& a, const Matrix& b) {
  if (!(a.field() == b.field())) throw Error(Errc::DimMismatch, "operands over different fields");
}

void require_square(const Matrix& a) {
  if (!a.is_square()) throw Error(Errc::DimMismatch, "square matrix required, got " + dims(a));
}

}  // namespace

Matrix::Matrix(FieldPtr field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols) {
  if (!field_) throw Error(Errc::ConfigError, "matrix without a field");
  if (rows > kMaxDimension || cols > kMaxDimension) {
    throw Error(Errc::TooLarge, "dimensions capped at 64, got " + std::to_string(rows) + "x" +
                                    std::to_string(cols));
  }
  data_.assign(rows * cols, zero());
}

Matrix Matrix::identity(FieldPtr field, std::size_t k) {
  Matrix m(std::move(field), k, k);
  for (std::size_t i = 0; i < k; ++i) m(i, i) = one();
  return m;
}

Matrix Matrix::from_rows(FieldPtr field, const std::vector<std::vector<Element>>& rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r ? rows.front().size() : 0;
  Matrix m(std::move(field), r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) throw Error(Errc::DimMismatch, "ragged row " + std::to_string(i));
    for (std::size_t j = 0; j < c; ++j) {
      if (!m.field().contains(rows[i][j])) {
        throw Error(Errc::OutOfRange, "entry [" + std::to_string(i) + "," + std::to_string(j) +
                                          "] is not reduced");
      }
      m(i, j) = rows[i][j];
    }
  }
  return m;
}

Matrix Matrix::diagonal(FieldPtr field, std::span<const Element> diag) {
  Matrix m(std::move(field), diag.size(), diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return m;
}

bool Matrix::is_identity() const noexcept {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if ((*this)(i, j) != (i == j ? one() : zero())) return false;
  return true;
}

bool operator==(const Matrix& a, const Matrix& b) noexcept {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && *a.field_ == *b.field_ && a.data_ == b.data_;
}

Matrix multiply(const Matrix& a, const Matrix& b) {
  require_same_field(a, b);
  if (a.cols() != b.rows()) throw Error(Errc::DimMismatch, dims(a) + " * " + dims(b));
  const Field& f = a.field();
  Matrix out(a.field_ptr(), a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t l = 0; l < a.cols(); ++l) {
      const Element x = a(i, l);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += f.mul(x, b(l, j));
    }
  }
  return out;
}

Matrix transpose(const Matrix& a) {
  Matrix out(a.field_ptr(), a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(j, i) = a(i, j);
  return out;
}

Matrix add(const Matrix& a, const Matrix& b) {
  require_same_field(a, b);
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw Error(Errc::DimMismatch, dims(a) + " + " + dims(b));
  Matrix out = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) += b(i, j);
  return out;
}

Matrix scale(const Matrix& a, Element s) {
  Matrix out = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a.field().mul(s, a(i, j));
  return out;
}

Element determinant_in_place(const Field& f, std::span<Element> m, std::size_t n) {
  Element det = one();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (pivot < n && m[pivot * n + c].is_zero()) ++pivot;
    if (pivot == n) return zero();
    if (pivot != c) {
      for (std::size_t j = c; j < n; ++j) std::swap(m[c * n + j], m[pivot * n + j]);
    }
    const Element p = m[c * n + c];
    det = f.mul(det, p);
    const Element p_inv = f.inv(p);
    for (std::size_t r = c + 1; r < n; ++r) {
      const Element x = m[r * n + c];
      if (x.is_zero()) continue;
      const Element factor = f.mul(x, p_inv);
      for (std::size_t j = c; j < n; ++j) m[r * n + j] += f.mul(factor, m[c * n + j]);
    }
  }
  return det;
}

Element determinant(const Matrix& a) {
  require_square(a);
  std::vector<Element> scratch(a.entries().begin(), a.entries().end());
  return determinant_in_place(a.field(), scratch, a.rows());
}

Matrix inverse(const Matrix& a) {
  require_square(a);
  const Field& f = a.field();
  const std::size_t n = a.rows();
  Matrix work = a;
  Matrix inv = Matrix::identity(a.field_ptr(), n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (pivot < n && work(pivot, c).is_zero()) ++pivot;
    if (pivot == n) throw Error(Errc::Singular, "matrix is singular");
    if (pivot != c) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(work(c, j), work(pivot, j));
        std::swap(inv(c, j), inv(pivot, j));
      }
    }
    const Element p_inv = f.inv(work(c, c));
    for (std::size_t j = 0; j < n; ++j) {
      work(c, j) = f.mul(work(c, j), p_inv);
      inv(c, j) = f.mul(inv(c, j), p_inv);
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c) continue;
      const Element x = work(r, c);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j) {
        work(r, j) += f.mul(x, work(c, j));
        inv(r, j) += f.mul(x, inv(c, j));
      }
    }
  }
  return inv;
}

Matrix submatrix(const Matrix& a, std::span<const std::size_t> row_idx,
                 std::span<const std::size_t> col_idx) {
  auto check = [](std::span<const std::size_t> idx, std::size_t bound, const char* what) {
    for (std::size_t t = 0; t < idx.size(); ++t) {
      if (idx[t] >= bound || (t > 0 && idx[t] <= idx[t - 1])) {
        throw Error(Errc::BadIndex, std::string(what) + " indices must be strictly increasing and < " +
                                        std::to_string(bound));
      }
    }
  };
  check(row_idx, a.rows(), "row");
  check(col_idx, a.cols(), "column");
  Matrix out(a.field_ptr(), row_idx.size(), col_idx.size());
  for (std::size_t i = 0; i < row_idx.size(); ++i)
    for (std::size_t j = 0; j < col_idx.size(); ++j) out(i, j) = a(row_idx[i], col_idx[j]);
  return out;
}

// ---------------------------------------------------------------------------

Permutation::Permutation(std::vector<std::size_t> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (auto v : images_) {
    if (v >= images_.size() || seen[v]) throw Error(Errc::BadIndex, "images do not form a bijection");
    seen[v] = true;
  }
}

Permutation Permutation::identity(std::size_t k) {
  std::vector<std::size_t> img(k);
  for (std::size_t i = 0; i < k; ++i) img[i] = i;
  return Permutation(std::move(img));
}

bool Permutation::is_full_cycle() const noexcept {
  if (images_.empty()) return false;
  std::size_t x = 0, len = 0;
  do {
    x = images_[x];
    ++len;
  } while (x != 0 && len <= images_.size());
  return len == images_.size();
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.size() != q.size()) throw Error(Errc::DimMismatch, "permutations of different sizes");
  std::vector<std::size_t> img(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) img[i] = p(q(i));
  return Permutation(std::move(img));
}

Permutation inverse(const Permutation& p) {
  std::vector<std::size_t> img(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) img[p(i)] = i;
  return Permutation(std::move(img));
}

Permutation power(const Permutation& p, std::int64_t e) {
  Permutation base = e < 0 ? inverse(p) : p;
  auto n = static_cast<std::uint64_t>(e < 0 ? -e : e);
  Permutation result = Permutation::identity(p.size());
  while (n) {
    if (n & 1u) result = compose(result, base);
    base = compose(base, base);
    n >>= 1;
  }
  return result;
}

Matrix to_matrix(FieldPtr field, const Permutation& p) {
  Matrix m(std::move(field), p.size(), p.size());
  for (std::size_t j = 0; j < p.size(); ++j) m(p(j), j) = one();
  return m;
}

}  // namespace gcirc
