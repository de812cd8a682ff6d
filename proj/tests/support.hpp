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

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "gcirc/circulant.hpp"
#include "gcirc/error.hpp"
#include "gcirc/field.hpp"
#include "gcirc/matrix.hpp"
#include "gcirc/modular.hpp"

namespace gcirc::test {

/// Runs `fn` and returns the error code it threw, or nothing.
template <class Fn>
std::optional<Errc> error_of(Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return std::nullopt;
}

inline Element random_element(std::mt19937_64& rng, const Field& f) {
  return Element{static_cast<std::uint32_t>(rng() % f.order())};
}

inline Element random_nonzero(std::mt19937_64& rng, const Field& f) {
  return Element{static_cast<std::uint32_t>(1 + rng() % (f.order() - 1))};
}

inline std::vector<Element> random_row(std::mt19937_64& rng, const Field& f, std::size_t k) {
  std::vector<Element> row(k);
  for (auto& c : row) c = random_element(rng, f);
  return row;
}

inline Matrix random_matrix(std::mt19937_64& rng, const FieldPtr& f, std::size_t r, std::size_t c) {
  Matrix a(f, r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) a(i, j) = random_element(rng, *f);
  return a;
}

/// A random g-circulant spec with gcd(g, k) = 1 and k in [kmin, kmax].
inline GCirculantSpec random_coprime_spec(std::mt19937_64& rng, const FieldPtr& f, std::size_t kmin,
                                          std::size_t kmax) {
  const std::size_t k = kmin + rng() % (kmax - kmin + 1);
  std::vector<std::size_t> gs;
  for (std::size_t g = 1; g <= k; ++g)
    if (gcd(g % k, k) == 1) gs.push_back(g % k);
  const std::size_t g = gs[rng() % gs.size()];
  return GCirculantSpec(f, g, random_row(rng, *f, k));
}

/// Cofactor expansion along the first row; independent of the elimination code.
inline Element cofactor_det(const Matrix& a) {
  const std::size_t n = a.rows();
  if (n == 1) return a(0, 0);
  const Field& f = a.field();
  Element acc = zero();
  for (std::size_t j = 0; j < n; ++j) {
    Matrix minor(a.field_ptr(), n - 1, n - 1);
    for (std::size_t i = 1; i < n; ++i)
      for (std::size_t c = 0, cc = 0; c < n; ++c)
        if (c != j) minor(i - 1, cc++) = a(i, c);
    acc += f.mul(a(0, j), cofactor_det(minor));
  }
  return acc;
}

/// Entry-by-entry reference product; no shared code with multiply().
inline Matrix naive_product(const Matrix& a, const Matrix& b) {
  const Field& f = a.field();
  Matrix c(a.field_ptr(), a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) {
      Element s = zero();
      for (std::size_t t = 0; t < a.cols(); ++t) s += f.mul(a(i, t), b(t, j));
      c(i, j) = s;
    }
  return c;
}

}  // namespace gcirc::test
