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
 * @file search.hpp
 * @brief Enumeration of g-circulant first rows hunting MDS diffusion matrices.
 *
 * A job walks a single integer range of positions. Position p stands for the
 * shift g = g_set[p / rows_per_g] and the row with ordinal p % rows_per_g, so
 * results come out in ascending (g, ordinal) order, a run can be resumed from
 * any position, and a job can be split into contiguous partitions whose
 * outputs concatenate to the unsplit output.
 *
 * Exhaustive rows are base-q numerals with c_0 the most significant digit.
 * Constrained left-circulant rows enumerate c_1..c_{k-1} the same way and set
 * c_0 = 1 + sum c_i. Random rows hash (seed, ordinal, position) per entry.
 */

#include <atomic>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "gcirc/circulant.hpp"
#include "gcirc/field.hpp"
#include "gcirc/properties.hpp"

namespace gcirc {

enum class SearchTarget { InvolutoryMds, SemiInvolutoryMds, SemiOrthogonalMds, MdsOnly };
enum class RowSpaceKind { Exhaustive, Random, ConstrainedLeftCirculant };

std::string_view to_string(SearchTarget t) noexcept;
std::string_view to_string(RowSpaceKind k) noexcept;
std::optional<SearchTarget> parse_target(std::string_view s) noexcept;
std::optional<RowSpaceKind> parse_row_space(std::string_view s) noexcept;

struct RowSpace {
  RowSpaceKind kind = RowSpaceKind::Exhaustive;
  std::uint64_t count = 0;  ///< Random only
  std::uint64_t seed = 0;   ///< Random only
};

/// Shortcuts taken before the full property check. Each one is a proven
/// necessary condition; `none()` runs the definition-level check on every row.
struct PruneOptions {
  bool g_filter = true;           ///< g^2 != 1 (mod k) => never involutory
  bool cheap_filters = true;      ///< zero entries (MDS), sum c_i != 1 (involutory)
  bool structured_square = true;  ///< A^2 from the (g^2, row2) expansion
  /// k = 2^d >= 4 => involutory implies not MDS. Off by default so that a
  /// search can be used to check the statement it would otherwise assume.
  bool power_of_two_rule = false;

  static PruneOptions none() noexcept { return {false, false, false, false}; }
};

/// Exhaustive spaces are refused beyond this many rows per g.
inline constexpr std::uint64_t kExhaustiveLimit = std::uint64_t{1} << 24;

struct SearchJob {
  FieldPtr field;
  std::size_t k = 0;
  std::vector<std::size_t> g_set;  ///< empty: every g in 1..k-1 with gcd(g,k) = 1
  SearchTarget target = SearchTarget::MdsOnly;
  RowSpace row_space;
  std::optional<std::uint64_t> resume_token;  ///< first position to examine
  std::optional<std::uint64_t> end_position;  ///< one past the last position
  PruneOptions prune;
  bool audit_pruned = false;  ///< re-check ~1% of pruned rows in full
  unsigned threads = 1;
};

struct SearchResult {
  GCirculantSpec spec;
  PropertyReport report;
  std::uint64_t ordinal = 0;
  std::uint64_t position = 0;
};

struct SearchSummary {
  std::uint64_t examined = 0;
  std::uint64_t emitted = 0;
  std::uint64_t pruned = 0;
  std::uint64_t audited = 0;
  std::uint64_t begin = 0;
  std::uint64_t end = 0;
  std::uint64_t next_position = 0;  ///< resume token when interrupted
  bool complete = false;
  double wall_ms = 0;
};

/// Sorted, de-duplicated shift set; CONFIG_ERROR for g with gcd(g,k) != 1
/// or a constrained job whose g set is not {k-1}.
std::vector<std::size_t> effective_g_set(const SearchJob& job);
std::uint64_t rows_per_g(const SearchJob& job);
std::uint64_t total_positions(const SearchJob& job);

/// Row for an ordinal; empty for constrained rows that fail the quadratic conditions.
std::optional<std::vector<Element>> row_at(const SearchJob& job, std::uint64_t ordinal);

std::uint64_t constrained_row_count(const Field& f, std::size_t k);
/// c_1..c_{k-1} from the ordinal's digits, c_0 = 1 + sum c_i. No filtering.
std::vector<Element> constrained_row_candidate(const Field& f, std::size_t k, std::uint64_t ordinal);
/// The candidate if it also satisfies the quadratic conditions.
std::optional<std::vector<Element>> constrained_row_at(const Field& f, std::size_t k, std::uint64_t ordinal);
void for_each_constrained_row(const Field& f, std::size_t k,
                              const std::function<void(std::uint64_t, std::span<const Element>)>& fn);

std::vector<Element> exhaustive_row(const Field& f, std::size_t k, std::uint64_t ordinal);
std::vector<Element> random_row(const Field& f, std::size_t k, std::uint64_t seed, std::uint64_t ordinal);

/// Definition-level check of the target on a built matrix.
bool qualifies(const Matrix& a, SearchTarget target);
bool meets_target(const PropertyReport& report, SearchTarget target) noexcept;

using ResultSink = std::function<void(const SearchResult&)>;

/// Streams results in ascending position order. Every emitted result carries
/// a full, unpruned PropertyReport. SPACE_TOO_LARGE, BAD_RESUME_TOKEN,
/// CONFIG_ERROR on bad jobs; LAW_VIOLATION if a pruning audit fails.
SearchSummary run_search(const SearchJob& job, const ResultSink& sink,
                         const std::atomic<bool>* stop = nullptr);

std::vector<SearchResult> collect_search(const SearchJob& job, SearchSummary* summary = nullptr);

/// Contiguous, disjoint slices of the job's position range.
std::vector<SearchJob> job_partition(const SearchJob& job, std::size_t n_parts);

}  // namespace gcirc
