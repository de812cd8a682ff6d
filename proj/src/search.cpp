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
#include "gcirc/search.hpp"

#include <algorithm>
#include <chrono>
#include <future>
#include <string>

#include "gcirc/error.hpp"
#include "gcirc/modular.hpp"

namespace gcirc {

std::string_view to_string(SearchTarget t) noexcept {
  switch (t) {
    case SearchTarget::InvolutoryMds: return "INVOLUTORY_MDS";
    case SearchTarget::SemiInvolutoryMds: return "SEMI_INVOLUTORY_MDS";
    case SearchTarget::SemiOrthogonalMds: return "SEMI_ORTHOGONAL_MDS";
    case SearchTarget::MdsOnly: return "MDS_ONLY";
  }
  return "?";
}

std::string_view to_string(RowSpaceKind k) noexcept {
  switch (k) {
    case RowSpaceKind::Exhaustive: return "EXHAUSTIVE";
    case RowSpaceKind::Random: return "RANDOM";
    case RowSpaceKind::ConstrainedLeftCirculant: return "CONSTRAINED_LEFT_CIRCULANT";
  }
  return "?";
}

std::optional<SearchTarget> parse_target(std::string_view s) noexcept {
  for (auto t : {SearchTarget::InvolutoryMds, SearchTarget::SemiInvolutoryMds,
                 SearchTarget::SemiOrthogonalMds, SearchTarget::MdsOnly}) {
    if (s == to_string(t)) return t;
  }
  return std::nullopt;
}

std::optional<RowSpaceKind> parse_row_space(std::string_view s) noexcept {
  for (auto k : {RowSpaceKind::Exhaustive, RowSpaceKind::Random, RowSpaceKind::ConstrainedLeftCirculant}) {
    if (s == to_string(k)) return k;
  }
  return std::nullopt;
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// q^n, or nullopt once it passes `cap`.
std::optional<std::uint64_t> bounded_power(std::uint64_t q, std::size_t n, std::uint64_t cap) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (r > cap / q) return std::nullopt;
    r *= q;
  }
  return r;
}

bool is_power_of_two(std::size_t k) { return k && (k & (k - 1)) == 0; }

bool involutory_target(SearchTarget t) { return t == SearchTarget::InvolutoryMds; }

}  // namespace

std::vector<Element> exhaustive_row(const Field& f, std::size_t k, std::uint64_t ordinal) {
  std::vector<Element> row(k);
  const std::uint64_t q = f.order();
  for (std::size_t pos = k; pos-- > 0;) {
    row[pos] = Element{static_cast<std::uint32_t>(ordinal % q)};
    ordinal /= q;
  }
  return row;
}

std::vector<Element> random_row(const Field& f, std::size_t k, std::uint64_t seed, std::uint64_t ordinal) {
  std::vector<Element> row(k);
  const std::uint64_t base = splitmix64(splitmix64(seed) ^ ordinal);
  for (std::size_t pos = 0; pos < k; ++pos) {
    row[pos] = Element{static_cast<std::uint32_t>(splitmix64(base ^ pos) & (f.order() - 1))};
  }
  return row;
}

std::uint64_t constrained_row_count(const Field& f, std::size_t k) {
  auto n = bounded_power(f.order(), k - 1, kExhaustiveLimit);
  if (!n) throw Error(Errc::SpaceTooLarge, "constrained row space exceeds 2^24 rows");
  return *n;
}

std::vector<Element> constrained_row_candidate(const Field& f, std::size_t k, std::uint64_t ordinal) {
  std::vector<Element> row(k);
  const std::uint64_t q = f.order();
  Element sum = zero();
  for (std::size_t pos = k; pos-- > 1;) {
    row[pos] = Element{static_cast<std::uint32_t>(ordinal % q)};
    ordinal /= q;
    sum += row[pos];
  }
  row[0] = one() + sum;
  return row;
}

std::optional<std::vector<Element>> constrained_row_at(const Field& f, std::size_t k, std::uint64_t ordinal) {
  auto row = constrained_row_candidate(f, k, ordinal);
  if (!left_circulant_involutory_conditions(f, row)) return std::nullopt;
  return row;
}

void for_each_constrained_row(const Field& f, std::size_t k,
                              const std::function<void(std::uint64_t, std::span<const Element>)>& fn) {
  const std::uint64_t n = constrained_row_count(f, k);
  for (std::uint64_t ord = 0; ord < n; ++ord) {
    if (auto row = constrained_row_at(f, k, ord)) fn(ord, *row);
  }
}

std::vector<std::size_t> effective_g_set(const SearchJob& job) {
  if (!job.field) throw Error(Errc::ConfigError, "job has no field");
  if (job.k < 2 || job.k > kMaxDimension) {
    throw Error(Errc::ConfigError, "job order k must be in 2..64, got " + std::to_string(job.k));
  }
  const std::size_t k = job.k;
  std::vector<std::size_t> gs;
  if (job.row_space.kind == RowSpaceKind::ConstrainedLeftCirculant) {
    for (auto g : job.g_set) {
      if (g % k != k - 1) throw Error(Errc::ConfigError, "constrained left-circulant rows require g = k-1");
    }
    return {k - 1};
  }
  if (job.g_set.empty()) {
    for (std::size_t g = 1; g < k; ++g)
      if (gcd(g, k) == 1) gs.push_back(g);
  } else {
    for (auto g : job.g_set) {
      if (gcd(g % k, k) != 1) {
        throw Error(Errc::ConfigError, "g = " + std::to_string(g) + " is not coprime to k = " + std::to_string(k));
      }
      gs.push_back(g % k);
    }
  }
  std::sort(gs.begin(), gs.end());
  gs.erase(std::unique(gs.begin(), gs.end()), gs.end());
  return gs;
}

std::uint64_t rows_per_g(const SearchJob& job) {
  switch (job.row_space.kind) {
    case RowSpaceKind::Exhaustive: {
      auto n = bounded_power(job.field->order(), job.k, kExhaustiveLimit);
      if (!n) {
        throw Error(Errc::SpaceTooLarge, "exhaustive space q^k exceeds 2^24 rows; use RANDOM rows");
      }
      return *n;
    }
    case RowSpaceKind::Random: return job.row_space.count;
    case RowSpaceKind::ConstrainedLeftCirculant: return constrained_row_count(*job.field, job.k);
  }
  return 0;
}

std::uint64_t total_positions(const SearchJob& job) {
  return rows_per_g(job) * effective_g_set(job).size();
}

std::optional<std::vector<Element>> row_at(const SearchJob& job, std::uint64_t ordinal) {
  switch (job.row_space.kind) {
    case RowSpaceKind::Exhaustive: return exhaustive_row(*job.field, job.k, ordinal);
    case RowSpaceKind::Random: return random_row(*job.field, job.k, job.row_space.seed, ordinal);
    case RowSpaceKind::ConstrainedLeftCirculant: return constrained_row_at(*job.field, job.k, ordinal);
  }
  return std::nullopt;
}

bool qualifies(const Matrix& a, SearchTarget target) {
  switch (target) {
    case SearchTarget::InvolutoryMds: return is_involutory(a) && is_mds(a).mds;
    case SearchTarget::MdsOnly: return is_mds(a).mds;
    case SearchTarget::SemiInvolutoryMds:
    case SearchTarget::SemiOrthogonalMds: {
      if (determinant(a).is_zero()) return false;
      auto pair = target == SearchTarget::SemiInvolutoryMds ? detect_semi_involutory(a)
                                                            : detect_semi_orthogonal(a);
      return pair.has_value() && is_mds(a).mds;
    }
  }
  return false;
}

bool meets_target(const PropertyReport& r, SearchTarget target) noexcept {
  switch (target) {
    case SearchTarget::InvolutoryMds: return r.involutory && r.mds.mds;
    case SearchTarget::MdsOnly: return r.mds.mds;
    case SearchTarget::SemiInvolutoryMds: return r.semi_involutory.has_value() && r.mds.mds;
    case SearchTarget::SemiOrthogonalMds: return r.semi_orthogonal.has_value() && r.mds.mds;
  }
  return false;
}

namespace {

enum class Verdict { Pruned, Rejected, Accepted };

// Shortcut pipeline; returns Pruned when a necessary condition rules the row out.
Verdict screen(const SearchJob& job, const GCirculantSpec& spec) {
  const PruneOptions& p = job.prune;
  const std::size_t k = spec.k;
  const bool inv = involutory_target(job.target);

  if (inv && p.g_filter && !involutory_g_filter(spec.g, k)) return Verdict::Pruned;
  if (inv && p.power_of_two_rule && k >= 4 && is_power_of_two(k)) return Verdict::Pruned;
  if (p.cheap_filters) {
    for (auto c : spec.row)
      if (c.is_zero()) return Verdict::Pruned;  // every target here demands MDS
    if (inv) {
      Element sum = zero();
      for (auto c : spec.row) sum += c;
      if (sum != one()) return Verdict::Pruned;
    }
  }
  if (inv && p.structured_square) {
    const auto sq = square_structured(spec);
    bool identity = sq.row2[0] == one() && (k == 1 || sq.g2 == 1);
    for (std::size_t l = 1; identity && l < k; ++l) identity = sq.row2[l].is_zero();
    if (!identity) return Verdict::Pruned;
    return is_mds(build_g_circulant(spec)).mds ? Verdict::Accepted : Verdict::Rejected;
  }
  return qualifies(build_g_circulant(spec), job.target) ? Verdict::Accepted : Verdict::Rejected;
}

struct BlockOutput {
  std::vector<SearchResult> results;
  std::uint64_t examined = 0;
  std::uint64_t pruned = 0;
  std::uint64_t audited = 0;
};

BlockOutput run_block(const SearchJob& job, const std::vector<std::size_t>& gs, std::uint64_t per_g,
                      std::uint64_t begin, std::uint64_t end) {
  BlockOutput out;
  for (std::uint64_t pos = begin; pos < end; ++pos) {
    const std::size_t g = gs[pos / per_g];
    const std::uint64_t ordinal = pos % per_g;
    ++out.examined;
    auto row = row_at(job, ordinal);
    if (!row) {
      ++out.pruned;  // constrained candidate failed the quadratic conditions
      if (job.audit_pruned && splitmix64(pos) % 100 == 0) {
        ++out.audited;
        const auto cand = constrained_row_candidate(*job.field, job.k, ordinal);
        if (qualifies(build_g_circulant(GCirculantSpec(job.field, g, cand)), job.target)) {
          throw Error(Errc::LawViolation, "pruned constrained row at position " + std::to_string(pos) + " qualifies");
        }
      }
      continue;
    }
    GCirculantSpec spec(job.field, g, std::move(*row));
    const Verdict v = screen(job, spec);
    if (v == Verdict::Pruned) {
      ++out.pruned;
      if (job.audit_pruned && splitmix64(pos) % 100 == 0) {
        ++out.audited;
        if (qualifies(build_g_circulant(spec), job.target)) {
          throw Error(Errc::LawViolation, "pruned row at position " + std::to_string(pos) + " qualifies");
        }
      }
      continue;
    }
    if (v == Verdict::Rejected) continue;

    // Re-verify from scratch, no shortcuts.
    PropertyReport report = check_properties(build_g_circulant(spec));
    if (!meets_target(report, job.target)) {
      throw Error(Errc::LawViolation, "screened row at position " + std::to_string(pos) + " fails re-verification");
    }
    out.results.push_back(SearchResult{std::move(spec), std::move(report), ordinal, pos});
  }
  return out;
}

constexpr std::uint64_t kBlockSize = 4096;

}  // namespace

SearchSummary run_search(const SearchJob& job, const ResultSink& sink, const std::atomic<bool>* stop) {
  const auto t0 = std::chrono::steady_clock::now();
  const auto gs = effective_g_set(job);
  const std::uint64_t per_g = rows_per_g(job);
  const std::uint64_t total = per_g * gs.size();
  const std::uint64_t end = job.end_position.value_or(total);
  const std::uint64_t begin = job.resume_token.value_or(0);
  if (end > total || begin > end) {
    throw Error(Errc::BadResumeToken, "position range [" + std::to_string(begin) + ", " + std::to_string(end) +
                                          ") outside [0, " + std::to_string(total) + "]");
  }

  SearchSummary summary;
  summary.begin = begin;
  summary.end = end;
  const unsigned threads = std::max(1u, job.threads);
  std::uint64_t pos = begin;
  while (pos < end) {
    if (stop && stop->load(std::memory_order_relaxed)) break;
    std::vector<std::future<BlockOutput>> batch;
    for (unsigned t = 0; t < threads && pos < end; ++t) {
      const std::uint64_t b = pos, e = std::min(end, pos + kBlockSize);
      batch.push_back(std::async(threads == 1 ? std::launch::deferred : std::launch::async,
                                 [&, b, e] { return run_block(job, gs, per_g, b, e); }));
      pos = e;
    }
    for (auto& fut : batch) {
      BlockOutput out = fut.get();
      summary.examined += out.examined;
      summary.pruned += out.pruned;
      summary.audited += out.audited;
      for (const auto& r : out.results) {
        sink(r);
        ++summary.emitted;
      }
    }
  }
  summary.next_position = pos;
  summary.complete = pos >= end;
  summary.wall_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return summary;
}

std::vector<SearchResult> collect_search(const SearchJob& job, SearchSummary* summary) {
  std::vector<SearchResult> out;
  auto s = run_search(job, [&](const SearchResult& r) { out.push_back(r); });
  if (summary) *summary = s;
  return out;
}

std::vector<SearchJob> job_partition(const SearchJob& job, std::size_t n_parts) {
  if (n_parts == 0) throw Error(Errc::UsageError, "partition count must be positive");
  const std::uint64_t total = total_positions(job);
  const std::uint64_t begin = job.resume_token.value_or(0);
  const std::uint64_t end = job.end_position.value_or(total);
  if (end > total || begin > end) throw Error(Errc::BadResumeToken, "job range outside its space");
  const std::uint64_t span = end - begin;
  std::vector<SearchJob> parts;
  for (std::size_t i = 0; i < n_parts; ++i) {
    SearchJob part = job;
    part.resume_token = begin + span * i / n_parts;
    part.end_position = begin + span * (i + 1) / n_parts;
    parts.push_back(std::move(part));
  }
  return parts;
}

}  // namespace gcirc
