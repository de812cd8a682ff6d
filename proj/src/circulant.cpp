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
#include "gcirc/circulant.hpp"

#include <string>

#include "gcirc/error.hpp"
#include "gcirc/modular.hpp"

namespace gcirc {

namespace {

void require_coprime(std::size_t g, std::size_t k) {
  if (k == 0 || gcd(g, k) != 1) {
    throw Error(Errc::NotCoprime, "gcd(" + std::to_string(g) + ", " + std::to_string(k) + ") != 1");
  }
}

bool is_power_of_two(std::size_t k) { return k && (k & (k - 1)) == 0; }

}  // namespace

GCirculantSpec::GCirculantSpec(FieldPtr f, std::size_t shift, std::vector<Element> r)
    : field(std::move(f)), k(r.size()), g(0), row(std::move(r)) {
  if (!field) throw Error(Errc::ConfigError, "spec without a field");
  if (k == 0) throw Error(Errc::DimMismatch, "empty first row");
  if (k > kMaxDimension) throw Error(Errc::TooLarge, "order capped at 64");
  g = shift % k;
  for (auto c : row) {
    if (!field->contains(c)) throw Error(Errc::OutOfRange, "row entry not reduced in the field");
  }
}

std::uint64_t GCirculantSpec::gcd_with_order() const noexcept { return gcd(g, k); }

CyclicSpec::CyclicSpec(FieldPtr f, Permutation r, std::vector<Element> c)
    : field(std::move(f)), rho(std::move(r)), row(std::move(c)) {
  if (!field) throw Error(Errc::ConfigError, "spec without a field");
  if (rho.size() != row.size() || !rho.is_full_cycle()) {
    throw Error(Errc::NotAKCycle, "rho must be a single " + std::to_string(row.size()) + "-cycle");
  }
}

Matrix build_g_circulant(const GCirculantSpec& spec) {
  const std::size_t k = spec.k;
  Matrix a(spec.field, k, k);
  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t shift = (i * spec.g) % k;
    for (std::size_t j = 0; j < k; ++j) a(i, j) = spec.row[(j + k - shift) % k];
  }
  return a;
}

Matrix build_circulant(FieldPtr field, std::vector<Element> row) {
  return build_g_circulant(GCirculantSpec(std::move(field), 1, std::move(row)));
}

Matrix build_left_circulant(FieldPtr field, std::vector<Element> row) {
  const std::size_t k = row.size();
  return build_g_circulant(GCirculantSpec(std::move(field), k == 0 ? 0 : k - 1, std::move(row)));
}

Matrix build_cyclic(const CyclicSpec& spec) {
  const std::size_t k = spec.k();
  Matrix a(spec.field, k, k);
  // Row i holds c at rho^{-i}(j); step the inverse permutation once per row.
  const Permutation rho_inv = inverse(spec.rho);
  Permutation step = Permutation::identity(k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) a(i, j) = spec.row[step(j)];
    step = compose(rho_inv, step);
  }
  return a;
}

Permutation g_shift_cycle(std::size_t k, std::size_t g) {
  require_coprime(g % (k ? k : 1), k);
  std::vector<std::size_t> img(k);
  for (std::size_t x = 0; x < k; ++x) img[x] = (x + g) % k;
  return Permutation(std::move(img));
}

PermutationForm permutation_representation(const GCirculantSpec& spec) {
  require_coprime(spec.g, spec.k);
  const std::size_t k = spec.k;
  const std::size_t g_inv = static_cast<std::size_t>(mod_inverse(spec.g, k));
  // Q_g has its 1 in row i at column i*g, i.e. column j carries it at row j*g^{-1}.
  std::vector<std::size_t> q_img(k), p_img(k);
  for (std::size_t j = 0; j < k; ++j) {
    q_img[j] = (j * g_inv) % k;
    p_img[j] = (j + k - 1) % k;
  }
  Permutation q_g(std::move(q_img));
  Permutation p(std::move(p_img));

  Matrix sum(spec.field, k, k);
  Permutation term = q_g;  // Q_g P^i
  for (std::size_t i = 0; i < k; ++i) {
    if (!spec.row[i].is_zero()) sum = sum + spec.row[i] * to_matrix(spec.field, term);
    term = compose(term, p);
  }
  return {std::move(q_g), std::move(p), std::move(sum)};
}

bool satisfies_shift(const Matrix& a, std::size_t g) {
  if (!a.is_square()) return false;
  const std::size_t k = a.rows();
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      if (a(i, j) != a((i + 1) % k, (j + g) % k)) return false;
  return true;
}

std::optional<DetectedShift> detect_g_circulant(const Matrix& a) {
  if (!a.is_square()) throw Error(Errc::DimMismatch, "square matrix required");
  const std::size_t k = a.rows();
  for (std::size_t g = 0; g < k; ++g) {
    if (satisfies_shift(a, g)) {
      auto r = a.row(0);
      return DetectedShift{g, std::vector<Element>(r.begin(), r.end())};
    }
  }
  return std::nullopt;
}

Element square_coefficient(const Field& f, std::span<const Element> row, std::size_t g, std::size_t l) {
  const std::size_t k = row.size();
  Element acc = zero();
  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t j = (l + k - (g * i) % k) % k;
    acc += f.mul(row[i], row[j]);
  }
  return acc;
}

StructuredSquare square_structured(const GCirculantSpec& spec) {
  require_coprime(spec.g, spec.k);
  const std::size_t k = spec.k;
  StructuredSquare out{(spec.g * spec.g) % k, std::vector<Element>(k)};
  for (std::size_t l = 0; l < k; ++l) out.row2[l] = square_coefficient(*spec.field, spec.row, spec.g, l);
  return out;
}

std::size_t product_shift_law(const GCirculantSpec& a, const GCirculantSpec& b) {
  if (a.k != b.k) throw Error(Errc::DimMismatch, "orders differ");
  const std::size_t gh = (a.g * b.g) % a.k;
  if (!satisfies_shift(build_g_circulant(a) * build_g_circulant(b), gh)) {
    throw Error(Errc::LawViolation, "product is not " + std::to_string(gh) + "-circulant");
  }
  return gh;
}

namespace {

DetectedShift shift_law(const GCirculantSpec& spec, const Matrix& image, const char* what) {
  const std::size_t g_inv = static_cast<std::size_t>(mod_inverse(spec.g, spec.k));
  if (!satisfies_shift(image, g_inv)) {
    throw Error(Errc::LawViolation, std::string(what) + " is not " + std::to_string(g_inv) + "-circulant");
  }
  auto r = image.row(0);
  return {g_inv, std::vector<Element>(r.begin(), r.end())};
}

}  // namespace

DetectedShift inverse_shift_law(const GCirculantSpec& spec) {
  require_coprime(spec.g, spec.k);
  return shift_law(spec, inverse(build_g_circulant(spec)), "inverse");
}

DetectedShift transpose_shift_law(const GCirculantSpec& spec) {
  require_coprime(spec.g, spec.k);
  return shift_law(spec, transpose(build_g_circulant(spec)), "transpose");
}

CyclicToCirculant cyclic_to_circulant(const CyclicSpec& spec) {
  const std::size_t k = spec.k();
  std::vector<std::size_t> q_img(k);
  std::vector<Element> circ_row(k);
  std::size_t orbit = 0;
  for (std::size_t j = 0; j < k; ++j) {
    q_img[j] = orbit;
    circ_row[j] = spec.row[orbit];
    orbit = spec.rho(orbit);
  }
  return {Permutation(std::move(q_img)), std::move(circ_row)};
}

std::pair<Matrix, Matrix> left_circulant_submatrices(const GCirculantSpec& spec) {
  const std::size_t k = spec.k;
  if (k < 4 || !is_power_of_two(k) || spec.g != k / 2 - 1) {
    throw Error(Errc::BadOrder, "need k = 2^d >= 4 and g = 2^(d-1) - 1, got k = " + std::to_string(k) +
                                    ", g = " + std::to_string(spec.g));
  }
  std::vector<std::size_t> even, odd;
  for (std::size_t i = 0; i < k; i += 2) {
    even.push_back(i);
    odd.push_back(i + 1);
  }
  const Matrix a = build_g_circulant(spec);
  return {submatrix(a, even, even), submatrix(a, even, odd)};
}

}  // namespace gcirc
