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
#include "gcirc/properties.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "gcirc/circulant.hpp"
#include "gcirc/error.hpp"

namespace gcirc {

namespace {

// Advance idx to the next s-subset of {0..n-1} in lexicographic order.
bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
  const std::size_t s = idx.size();
  for (std::size_t t = s; t-- > 0;) {
    if (idx[t] < n - s + t) {
      ++idx[t];
      for (std::size_t u = t + 1; u < s; ++u) idx[u] = idx[u - 1] + 1;
      return true;
    }
  }
  return false;
}

std::vector<std::size_t> first_combination(std::size_t s) {
  std::vector<std::size_t> idx(s);
  for (std::size_t t = 0; t < s; ++t) idx[t] = t;
  return idx;
}

}  // namespace

MdsResult is_mds(const Matrix& a) {
  if (!a.is_square()) throw Error(Errc::DimMismatch, "square matrix required");
  const std::size_t k = a.rows();
  if (k >= kMdsHardLimit) {
    throw Error(Errc::TooLarge, "MDS minor enumeration refused for k = " + std::to_string(k));
  }
  const Field& f = a.field();
  MdsResult out;
  std::vector<Element> scratch(k * k);
  for (std::size_t s = 1; s <= k; ++s) {
    auto rows = first_combination(s);
    do {
      auto cols = first_combination(s);
      do {
        ++out.minors_checked;
        for (std::size_t i = 0; i < s; ++i)
          for (std::size_t j = 0; j < s; ++j) scratch[i * s + j] = a(rows[i], cols[j]);
        if (determinant_in_place(f, std::span(scratch).first(s * s), s).is_zero()) {
          out.witness = MinorWitness{rows, cols};
          return out;
        }
      } while (next_combination(cols, k));
    } while (next_combination(rows, k));
  }
  out.mds = true;
  return out;
}

bool is_involutory(const Matrix& a) { return a.is_square() && (a * a).is_identity(); }

bool is_orthogonal(const Matrix& a) { return a.is_square() && (a * transpose(a)).is_identity(); }

std::vector<RatioComponent> ratio_components(const Matrix& a) {
  const std::size_t n_rows = a.rows(), n_cols = a.cols();
  std::vector<bool> row_seen(n_rows, false), col_seen(n_cols, false);
  std::vector<RatioComponent> out;
  for (std::size_t start = 0; start < n_cols; ++start) {
    if (col_seen[start]) continue;
    RatioComponent comp;
    // Queue entries: column nodes as j, row nodes as n_cols + i.
    std::deque<std::size_t> queue{start};
    col_seen[start] = true;
    while (!queue.empty()) {
      const std::size_t node = queue.front();
      queue.pop_front();
      if (node < n_cols) {
        comp.cols.push_back(node);
        for (std::size_t i = 0; i < n_rows; ++i) {
          if (!row_seen[i] && !a(i, node).is_zero()) {
            row_seen[i] = true;
            queue.push_back(n_cols + i);
          }
        }
      } else {
        const std::size_t i = node - n_cols;
        comp.rows.push_back(i);
        for (std::size_t j = 0; j < n_cols; ++j) {
          if (!col_seen[j] && !a(i, j).is_zero()) {
            col_seen[j] = true;
            queue.push_back(j);
          }
        }
      }
    }
    std::sort(comp.rows.begin(), comp.rows.end());
    std::sort(comp.cols.begin(), comp.cols.end());
    out.push_back(std::move(comp));
  }
  for (std::size_t i = 0; i < n_rows; ++i) {
    if (!row_seen[i]) out.push_back(RatioComponent{{i}, {}});
  }
  return out;
}

std::optional<DiagonalPair> solve_diagonal_scaling(const Matrix& a, const Matrix& target) {
  if (a.rows() != target.rows() || a.cols() != target.cols() || !(a.field() == target.field())) {
    throw Error(Errc::DimMismatch, "scaling target must match the matrix");
  }
  const Field& f = a.field();
  const std::size_t n_rows = a.rows(), n_cols = a.cols();
  // d1[i] * A[i,j] * d2[j] = T[i,j] with nonzero d's forces matching zero patterns.
  for (std::size_t i = 0; i < n_rows; ++i)
    for (std::size_t j = 0; j < n_cols; ++j)
      if (a(i, j).is_zero() != target(i, j).is_zero()) return std::nullopt;

  std::vector<std::optional<Element>> d1(n_rows), d2(n_cols);
  for (const auto& comp : ratio_components(a)) {
    if (comp.cols.empty()) {
      for (auto i : comp.rows) d1[i] = one();
      continue;
    }
    d2[comp.cols.front()] = one();
    std::deque<std::size_t> queue{comp.cols.front()};
    while (!queue.empty()) {
      const std::size_t node = queue.front();
      queue.pop_front();
      if (node < n_cols) {
        const std::size_t j = node;
        for (std::size_t i = 0; i < n_rows; ++i) {
          if (a(i, j).is_zero()) continue;
          const Element want = f.div(target(i, j), f.mul(a(i, j), *d2[j]));
          if (!d1[i]) {
            d1[i] = want;
            queue.push_back(n_cols + i);
          } else if (*d1[i] != want) {
            return std::nullopt;
          }
        }
      } else {
        const std::size_t i = node - n_cols;
        for (std::size_t j = 0; j < n_cols; ++j) {
          if (a(i, j).is_zero()) continue;
          const Element want = f.div(target(i, j), f.mul(a(i, j), *d1[i]));
          if (!d2[j]) {
            d2[j] = want;
            queue.push_back(j);
          } else if (*d2[j] != want) {
            return std::nullopt;
          }
        }
      }
    }
  }

  DiagonalPair pair;
  for (auto& d : d1) pair.d1.push_back(d.value_or(one()));
  for (auto& d : d2) pair.d2.push_back(d.value_or(one()));

  const Matrix check = Matrix::diagonal(a.field_ptr(), pair.d1) * a * Matrix::diagonal(a.field_ptr(), pair.d2);
  if (!(check == target)) return std::nullopt;

  pair.scalar1 = diagonal_power_scalar(f, pair.d1, n_rows);
  pair.scalar2 = diagonal_power_scalar(f, pair.d2, n_cols);
  return pair;
}

std::optional<DiagonalPair> detect_semi_involutory(const Matrix& a) {
  return solve_diagonal_scaling(a, inverse(a));
}

std::optional<DiagonalPair> detect_semi_orthogonal(const Matrix& a) {
  return solve_diagonal_scaling(a, transpose(inverse(a)));
}

std::optional<Element> diagonal_power_scalar(const Field& f, std::span<const Element> d, std::uint64_t k) {
  if (d.empty()) return std::nullopt;
  const Element first = f.pow(d.front(), k);
  for (auto x : d.subspan(1)) {
    if (f.pow(x, k) != first) return std::nullopt;
  }
  return first;
}

namespace {

DiagonalPair rescale(const Field& f, const DiagonalPair& pair, std::span<const RatioComponent> components,
                     std::span<const Element> lambdas) {
  DiagonalPair out = pair;
  for (std::size_t c = 0; c < components.size(); ++c) {
    const Element lambda = lambdas[c];
    const Element lambda_inv = f.inv(lambda);
    for (auto i : components[c].rows) out.d1[i] = f.mul(lambda, pair.d1[i]);
    for (auto j : components[c].cols) out.d2[j] = f.mul(lambda_inv, pair.d2[j]);
  }
  out.scalar1 = diagonal_power_scalar(f, out.d1, out.d1.size());
  out.scalar2 = diagonal_power_scalar(f, out.d2, out.d2.size());
  return out;
}

}  // namespace

DiagonalPair normalize_scaling(const Field& f, const DiagonalPair& pair,
                               std::span<const RatioComponent> components,
                               std::span<const Element> anchor_values) {
  if (!anchor_values.empty() && anchor_values.size() != components.size()) {
    throw Error(Errc::DimMismatch, "one anchor value per component required");
  }
  std::vector<Element> lambdas(components.size(), one());
  for (std::size_t c = 0; c < components.size(); ++c) {
    if (components[c].cols.empty()) continue;
    const Element target = anchor_values.empty() ? one() : anchor_values[c];
    if (target.is_zero()) throw Error(Errc::DivisionByZero, "anchor value must be nonzero");
    // lambda^{-1} * d2[anchor] = target
    lambdas[c] = f.div(pair.d2[components[c].cols.front()], target);
  }
  return rescale(f, pair, components, lambdas);
}

std::optional<DiagonalPair> find_scalar_law_pair(const Field& f, const DiagonalPair& pair,
                                                 std::span<const RatioComponent> components) {
  const std::uint64_t k1 = pair.d1.size(), k2 = pair.d2.size();
  auto common_power = [&](const std::vector<Element>& d, const std::vector<std::size_t>& idx,
                          std::uint64_t k) -> std::optional<std::optional<Element>> {
    if (idx.empty()) return std::optional<Element>{};
    std::vector<Element> sel;
    for (auto t : idx) sel.push_back(d[t]);
    auto p = diagonal_power_scalar(f, sel, k);
    if (!p) return std::nullopt;  // no lambda can repair this component
    return std::optional<Element>{*p};
  };

  std::optional<Element> target1, target2;
  std::vector<Element> lambdas(components.size(), one());
  for (std::size_t c = 0; c < components.size(); ++c) {
    auto u = common_power(pair.d1, components[c].rows, k1);
    auto v = common_power(pair.d2, components[c].cols, k2);
    if (!u || !v) return std::nullopt;
    // lambda^k1 * u = target1 and lambda^{-k2} * v = target2.
    auto ok = [&](Element lambda) {
      if (*u && target1 && f.mul(f.pow(lambda, k1), **u) != *target1) return false;
      if (*v && target2 && f.mul(f.inv(f.pow(lambda, k2)), **v) != *target2) return false;
      return true;
    };
    std::optional<Element> chosen;
    if (ok(one())) {
      chosen = one();
    } else {
      for (std::uint32_t x = 2; x < f.order(); ++x) {
        if (ok(Element{x})) {
          chosen = Element{x};
          break;
        }
      }
    }
    if (!chosen) return std::nullopt;
    lambdas[c] = *chosen;
    if (*u && !target1) target1 = f.mul(f.pow(*chosen, k1), **u);
    if (*v && !target2) target2 = f.mul(f.inv(f.pow(*chosen, k2)), **v);
  }
  DiagonalPair out = rescale(f, pair, components, lambdas);
  if (!out.scalar1 || !out.scalar2) return std::nullopt;
  return out;
}

bool left_circulant_involutory_conditions(const Field& f, std::span<const Element> row) {
  const std::size_t k = row.size();
  if (k == 0) return false;
  Element sum = zero();
  for (auto c : row) sum += c;
  if (sum != one()) return false;
  const std::size_t g = k - 1;
  for (std::size_t l = 1; l <= (k - 1) / 2; ++l) {
    if (!square_coefficient(f, row, g, l).is_zero()) return false;
  }
  return true;
}

bool involutory_g_filter(std::size_t g, std::size_t k) {
  if (k == 0) return false;
  return (g % k) * (g % k) % k == 1 % k;
}

PropertyReport check_properties(const Matrix& a) {
  PropertyReport r;
  r.mds = is_mds(a);
  r.involutory = is_involutory(a);
  r.orthogonal = is_orthogonal(a);
  r.nonsingular = !determinant(a).is_zero();
  if (r.nonsingular) {
    r.semi_involutory = detect_semi_involutory(a);
    r.semi_orthogonal = detect_semi_orthogonal(a);
  }
  return r;
}

}  // namespace gcirc
