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
#include "gcirc/io.hpp"

#include <cstdio>
#include <string>

#include "gcirc/error.hpp"

namespace gcirc::io {

namespace {

[[noreturn]] void config_error(const std::string& what) { throw Error(Errc::ConfigError, what); }

bool is_non_negative_int(const json& v) {
  return v.is_number_unsigned() || (v.is_number_integer() && v.get<std::int64_t>() >= 0);
}

const json& require(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) config_error(std::string("missing key \"") + key + "\"");
  return j.at(key);
}

std::uint64_t require_uint(const json& j, const char* key) {
  const json& v = require(j, key);
  if (!is_non_negative_int(v)) {
    config_error(std::string("\"") + key + "\" must be a non-negative integer");
  }
  return v.get<std::uint64_t>();
}

FieldPtr resolve_field(const json& j, FieldPtr fallback) {
  if (j.is_object() && j.contains("field")) return field_from_json(j.at("field"));
  if (!fallback) config_error("no field given; pass {\"field\": {\"m\": .., \"poly\": ..}} or --field-m/--field-poly");
  return fallback;
}

}  // namespace

std::uint32_t parse_modulus(const std::string& text) {
  try {
    std::size_t used = 0;
    const unsigned long v = std::stoul(text, &used, 0);
    if (used != text.size() || v > 0x1FFFFul) config_error("bad modulus \"" + text + "\"");
    return static_cast<std::uint32_t>(v);
  } catch (const std::logic_error&) {
    config_error("bad modulus \"" + text + "\"");
  }
}

json field_to_json(const Field& f) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "0x%x", f.modulus());
  return json{{"m", f.degree()}, {"poly", buf}};
}

FieldPtr field_from_json(const json& j) {
  const auto m = require_uint(j, "m");
  const json& poly = require(j, "poly");
  std::uint32_t modulus = 0;
  if (poly.is_string())
    modulus = parse_modulus(poly.get<std::string>());
  else if (is_non_negative_int(poly))
    modulus = poly.get<std::uint32_t>();
  else
    config_error("\"poly\" must be a string or integer");
  if (m > kMaxDegree) throw Error(Errc::BadDegree, "m must be in 1..16");
  return make_field(static_cast<unsigned>(m), modulus);
}

json element_to_json(const Field& f, Element e) { return f.format_hex(e); }

Element element_from_json(const Field& f, const json& j) {
  if (j.is_string()) return f.parse(j.get<std::string>());
  if (is_non_negative_int(j)) {
    const auto v = j.get<std::uint64_t>();
    if (v >= f.order()) throw Error(Errc::OutOfRange, "element " + std::to_string(v) + " not reduced");
    return Element{static_cast<std::uint32_t>(v)};
  }
  config_error("field elements must be strings or non-negative integers");
}

json elements_to_json(const Field& f, std::span<const Element> v) {
  json arr = json::array();
  for (auto e : v) arr.push_back(element_to_json(f, e));
  return arr;
}

std::vector<Element> elements_from_json(const Field& f, const json& j) {
  if (!j.is_array()) config_error("expected an array of field elements");
  std::vector<Element> out;
  for (const auto& e : j) out.push_back(element_from_json(f, e));
  return out;
}

json matrix_to_json(const Matrix& a) {
  json rows = json::array();
  for (std::size_t i = 0; i < a.rows(); ++i) rows.push_back(elements_to_json(a.field(), a.row(i)));
  json out;
  if (a.is_square()) {
    out["k"] = a.rows();
  } else {
    out["rows"] = a.rows();
    out["cols"] = a.cols();
  }
  out["entries"] = std::move(rows);
  out["field"] = field_to_json(a.field());
  return out;
}

Matrix matrix_from_json(const json& j, FieldPtr fallback) {
  FieldPtr f = resolve_field(j, std::move(fallback));
  const json& entries = require(j, "entries");
  if (!entries.is_array()) config_error("\"entries\" must be an array of rows");
  std::vector<std::vector<Element>> rows;
  for (const auto& r : entries) rows.push_back(elements_from_json(*f, r));
  Matrix a = Matrix::from_rows(f, rows);
  if (j.contains("k") && (a.rows() != j.at("k").get<std::size_t>() || !a.is_square())) {
    config_error("\"k\" does not match the entries");
  }
  return a;
}

json spec_to_json(const GCirculantSpec& s) {
  return json{{"k", s.k}, {"g", s.g}, {"row", elements_to_json(*s.field, s.row)}, {"field", field_to_json(*s.field)}};
}

GCirculantSpec spec_from_json(const json& j, FieldPtr fallback) {
  FieldPtr f = resolve_field(j, std::move(fallback));
  auto row = elements_from_json(*f, require(j, "row"));
  const auto g = require_uint(j, "g");
  if (j.contains("k") && j.at("k").get<std::size_t>() != row.size()) config_error("\"k\" does not match the row length");
  return GCirculantSpec(f, static_cast<std::size_t>(g), std::move(row));
}

CyclicSpec cyclic_spec_from_json(const json& j, FieldPtr fallback) {
  FieldPtr f = resolve_field(j, std::move(fallback));
  auto row = elements_from_json(*f, require(j, "row"));
  const auto images = require(j, "rho").get<std::vector<std::size_t>>();
  Permutation rho = [&] {
    try {
      return Permutation(images);
    } catch (const Error&) {
      throw Error(Errc::NotAKCycle, "\"rho\" is not a permutation");
    }
  }();
  return CyclicSpec(f, std::move(rho), std::move(row));
}

json pair_to_json(const Field& f, const DiagonalPair& p) {
  json out{{"d1", elements_to_json(f, p.d1)}, {"d2", elements_to_json(f, p.d2)}};
  out["k1"] = p.scalar1 ? json(f.format_hex(*p.scalar1)) : json(nullptr);
  out["k2"] = p.scalar2 ? json(f.format_hex(*p.scalar2)) : json(nullptr);
  return out;
}

json report_to_json(const Field& f, const PropertyReport& r) {
  json mds{{"value", r.mds.mds}, {"minors_checked", r.mds.minors_checked}};
  if (r.mds.witness) mds["witness"] = json{{"rows", r.mds.witness->rows}, {"cols", r.mds.witness->cols}};
  json out{{"mds", mds}, {"involutory", r.involutory}, {"orthogonal", r.orthogonal}, {"nonsingular", r.nonsingular}};
  out["semi_involutory"] = r.semi_involutory ? pair_to_json(f, *r.semi_involutory) : json(nullptr);
  out["semi_orthogonal"] = r.semi_orthogonal ? pair_to_json(f, *r.semi_orthogonal) : json(nullptr);
  return out;
}

json sqrt_one_to_json(const SqrtOneSolutions& s) {
  return json{{"k", s.k}, {"solutions", s.solutions}, {"predicted", s.predicted_count}};
}

SearchJob job_from_json(const json& j, FieldPtr fallback) {
  if (!j.is_object()) config_error("job must be a JSON object");
  SearchJob job;
  job.field = resolve_field(j, std::move(fallback));
  job.k = static_cast<std::size_t>(require_uint(j, "k"));
  if (j.contains("g_set")) {
    if (!j.at("g_set").is_array()) config_error("\"g_set\" must be an array");
    for (const auto& g : j.at("g_set")) {
      if (!is_non_negative_int(g)) config_error("\"g_set\" entries must be non-negative integers");
      job.g_set.push_back(g.get<std::size_t>());
    }
  }
  const auto target = parse_target(require(j, "target").get<std::string>());
  if (!target) config_error("unknown target \"" + j.at("target").get<std::string>() + "\"");
  job.target = *target;

  if (j.contains("row_space")) {
    const json& rs = j.at("row_space");
    const auto kind = parse_row_space(require(rs, "kind").get<std::string>());
    if (!kind) config_error("unknown row_space kind");
    job.row_space.kind = *kind;
    if (*kind == RowSpaceKind::Random) {
      job.row_space.count = require_uint(rs, "count");
      job.row_space.seed = rs.contains("seed") ? require_uint(rs, "seed") : 0;
    }
  }
  if (j.contains("resume_token")) job.resume_token = require_uint(j, "resume_token");
  if (j.contains("end_position")) job.end_position = require_uint(j, "end_position");
  if (j.contains("prune")) {
    const json& p = j.at("prune");
    if (!p.is_object()) config_error("\"prune\" must be an object");
    job.prune.g_filter = p.value("g_filter", job.prune.g_filter);
    job.prune.cheap_filters = p.value("cheap_filters", job.prune.cheap_filters);
    job.prune.structured_square = p.value("structured_square", job.prune.structured_square);
    job.prune.power_of_two_rule = p.value("power_of_two_rule", job.prune.power_of_two_rule);
  }
  job.audit_pruned = j.value("audit_pruned", false);
  job.threads = j.value("threads", 1u);
  return job;
}

json job_to_json(const SearchJob& job) {
  json rs{{"kind", to_string(job.row_space.kind)}};
  if (job.row_space.kind == RowSpaceKind::Random) {
    rs["count"] = job.row_space.count;
    rs["seed"] = job.row_space.seed;
  }
  json out{{"field", field_to_json(*job.field)},
           {"k", job.k},
           {"g_set", job.g_set},
           {"target", to_string(job.target)},
           {"row_space", rs},
           {"prune",
            {{"g_filter", job.prune.g_filter},
             {"cheap_filters", job.prune.cheap_filters},
             {"structured_square", job.prune.structured_square},
             {"power_of_two_rule", job.prune.power_of_two_rule}}},
           {"audit_pruned", job.audit_pruned},
           {"threads", job.threads}};
  if (job.resume_token) out["resume_token"] = *job.resume_token;
  if (job.end_position) out["end_position"] = *job.end_position;
  return out;
}

json result_to_json(const SearchResult& r) {
  return json{{"position", r.position},
              {"ordinal", r.ordinal},
              {"g", r.spec.g},
              {"k", r.spec.k},
              {"row", elements_to_json(*r.spec.field, r.spec.row)},
              {"report", report_to_json(*r.spec.field, r.report)}};
}

json summary_to_json(const SearchSummary& s) {
  return json{{"summary",
               {{"examined", s.examined},
                {"emitted", s.emitted},
                {"pruned", s.pruned},
                {"audited", s.audited},
                {"begin", s.begin},
                {"end", s.end},
                {"next_position", s.next_position},
                {"complete", s.complete},
                {"wall_ms", s.wall_ms}}}};
}

}  // namespace gcirc::io
