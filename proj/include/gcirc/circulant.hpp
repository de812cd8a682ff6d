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
 * @file circulant.hpp
 * @brief Circulant, left-circulant, g-circulant and cyclic matrices.
 *
 * A g-circulant matrix of order k is fixed by its first row c_0..c_{k-1} and
 * the shift g: A[i,j] = c_{(j - i*g) mod k}. g = 1 gives the ordinary
 * circulant, g = k-1 the left-circulant. For gcd(g,k) = 1 the matrix is a
 * cyclic matrix for the k-cycle x -> x + g, and has the permutation form
 *
 *     A = sum_i c_i Q_g P^i,   Q_g = g-circulant(1,0,...,0),  P = circulant(0,1,0,...,0).
 *
 * Structure-theorem operations (square, shift laws, permutation form) reject
 * gcd(g,k) != 1 with NOT_COPRIME; the plain constructors accept any g.
 */

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "gcirc/field.hpp"
#include "gcirc/matrix.hpp"

namespace gcirc {

struct GCirculantSpec {
  FieldPtr field;
  std::size_t k = 0;
  std::size_t g = 0;  ///< reduced mod k
  std::vector<Element> row;

  /// Reduces g mod k and checks row length and entry range.
  GCirculantSpec(FieldPtr field, std::size_t g, std::vector<Element> row);

  std::uint64_t gcd_with_order() const noexcept;
  bool is_coprime() const noexcept { return gcd_with_order() == 1; }
};

struct CyclicSpec {
  FieldPtr field;
  Permutation rho;
  std::vector<Element> row;

  /// NOT_A_KCYCLE unless rho is a single k-cycle with k = row.size().
  CyclicSpec(FieldPtr field, Permutation rho, std::vector<Element> row);

  std::size_t k() const noexcept { return row.size(); }
};

Matrix build_g_circulant(const GCirculantSpec& spec);
Matrix build_circulant(FieldPtr field, std::vector<Element> row);
Matrix build_left_circulant(FieldPtr field, std::vector<Element> row);
Matrix build_cyclic(const CyclicSpec& spec);

/// The k-cycle (0 g 2g ...) mod k, i.e. x -> x + g. NOT_COPRIME if gcd(g,k) != 1.
Permutation g_shift_cycle(std::size_t k, std::size_t g);

/// Permutation form of A: Q_g, P, and sum_i c_i Q_g P^i rebuilt as a matrix.
struct PermutationForm {
  Permutation q_g;
  Permutation p;
  Matrix reconstruction;
};
PermutationForm permutation_representation(const GCirculantSpec& spec);

/// True iff A[i,j] = A[(i+1) mod k, (j+g) mod k] for all i, j.
bool satisfies_shift(const Matrix& a, std::size_t g);

struct DetectedShift {
  std::size_t g;
  std::vector<Element> row;
};
/// Smallest g in 0..k-1 for which A is g-circulant, with row 0.
std::optional<DetectedShift> detect_g_circulant(const Matrix& a);

/// A^2 = g^2-circulant(row2) with row2[l] = sum over g*i + j = l (mod k) of c_i c_j.
struct StructuredSquare {
  std::size_t g2;
  std::vector<Element> row2;
};
StructuredSquare square_structured(const GCirculantSpec& spec);

/// Coefficient of Q_g^2 P^l in A^2, for a single l.
Element square_coefficient(const Field& f, std::span<const Element> row, std::size_t g, std::size_t l);

/// g*h mod k; throws LAW_VIOLATION if the product is not (g*h)-circulant.
std::size_t product_shift_law(const GCirculantSpec& a, const GCirculantSpec& b);

/// g^{-1} mod k and row 0 of A^{-1}; LAW_VIOLATION if the inverse is not
/// g^{-1}-circulant. SINGULAR / NOT_COPRIME as usual.
DetectedShift inverse_shift_law(const GCirculantSpec& spec);
/// Same law for the transpose.
DetectedShift transpose_shift_law(const GCirculantSpec& spec);

/// Q with Q[i,j] = 1 iff i = rho^j(0), and the circulant row (c_0, c_rho(0), c_rho^2(0), ...),
/// so that cyclic * Q = circulant(circ_row).
struct CyclicToCirculant {
  Permutation q;
  std::vector<Element> circ_row;
};
CyclicToCirculant cyclic_to_circulant(const CyclicSpec& spec);

/// For k = 2^d >= 4 and g = 2^{d-1} - 1: rows {0,2,4,...} against even and
/// odd columns, both left-circulant. BAD_ORDER otherwise.
std::pair<Matrix, Matrix> left_circulant_submatrices(const GCirculantSpec& spec);

}  // namespace gcirc
