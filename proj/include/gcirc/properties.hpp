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
 * @file properties.hpp
 * @brief MDS, involutory, orthogonal, semi-involutory and semi-orthogonal checks.
 *
 * Semi-involutory (A^{-1} = D1 A D2) and semi-orthogonal (A^{-T} = D1 A D2)
 * detection solves d1[i] * A[i,j] * d2[j] = B[i,j] on the bipartite graph of
 * nonzero entries of A: each edge fixes the ratio d1[i] * d2[j], values are
 * propagated breadth-first from an anchor column (d2 = 1) per connected
 * component, and an inconsistent back edge rejects. Every solution lies in
 * the orbit (lambda_c D1, lambda_c^{-1} D2), one lambda_c per component.
 */

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "gcirc/field.hpp"
#include "gcirc/matrix.hpp"

namespace gcirc {

/// Minor enumeration refuses k at or above this order.
inline constexpr std::size_t kMdsHardLimit = 16;
/// Orders from here on are slow enough that callers should warn.
inline constexpr std::size_t kMdsSoftLimit = 12;

struct MinorWitness {
  std::vector<std::size_t> rows;
  std::vector<std::size_t> cols;
};

struct MdsResult {
  bool mds = false;
  std::optional<MinorWitness> witness;  ///< first singular minor, if any
  std::uint64_t minors_checked = 0;
};

/// Enumerates minors by (size, rows lexicographic, cols lexicographic) and
/// stops at the first singular one. TOO_LARGE for k >= 16.
MdsResult is_mds(const Matrix& a);

bool is_involutory(const Matrix& a);
bool is_orthogonal(const Matrix& a);

struct DiagonalPair {
  std::vector<Element> d1;
  std::vector<Element> d2;
  std::optional<Element> scalar1;  ///< k1 with D1^k = k1 I
  std::optional<Element> scalar2;  ///< k2 with D2^k = k2 I
};

/// Connected component of the ratio graph of A (rows and columns joined by nonzero entries).
struct RatioComponent {
  std::vector<std::size_t> rows;
  std::vector<std::size_t> cols;  ///< sorted; cols.front() is the anchor
};

std::vector<RatioComponent> ratio_components(const Matrix& a);

/// Solve diag(d1) * A * diag(d2) = target; the result is re-verified as an
/// exact matrix identity before it is returned.
std::optional<DiagonalPair> solve_diagonal_scaling(const Matrix& a, const Matrix& target);

/// SINGULAR if A is singular.
std::optional<DiagonalPair> detect_semi_involutory(const Matrix& a);
std::optional<DiagonalPair> detect_semi_orthogonal(const Matrix& a);

/// The common value of d[i]^k, or empty if the k-th powers differ.
std::optional<Element> diagonal_power_scalar(const Field& f, std::span<const Element> d, std::uint64_t k);

/// Rescale so that d2 at each component's anchor column equals anchor_values[c]
/// (1 when anchor_values is empty). Scalars are recomputed for the new pair.
DiagonalPair normalize_scaling(const Field& f, const DiagonalPair& pair,
                               std::span<const RatioComponent> components,
                               std::span<const Element> anchor_values = {});

/// Searches the scaling orbit of `pair` for a representative whose k-th
/// powers are scalar on both diagonals.
std::optional<DiagonalPair> find_scalar_law_pair(const Field& f, const DiagonalPair& pair,
                                                 std::span<const RatioComponent> components);

/// sum c_i = 1 and the g = k-1 convolution sums vanish for l = 1..floor((k-1)/2).
bool left_circulant_involutory_conditions(const Field& f, std::span<const Element> row);

/// False iff g^2 != 1 (mod k), in which case no g-circulant matrix is involutory.
bool involutory_g_filter(std::size_t g, std::size_t k);

struct PropertyReport {
  MdsResult mds;
  bool involutory = false;
  bool orthogonal = false;
  bool nonsingular = false;
  std::optional<DiagonalPair> semi_involutory;
  std::optional<DiagonalPair> semi_orthogonal;
};

PropertyReport check_properties(const Matrix& a);

}  // namespace gcirc
