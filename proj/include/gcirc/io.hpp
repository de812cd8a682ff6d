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

// JSON shapes shared by the CLI and its tests.
//
//   field   {"m": 8, "poly": "0x165"}
//   matrix  {"k": 5, "entries": [["0x01", ...], ...], "field": {...}}
//   spec    {"k": 5, "g": 3, "row": ["0x01", ...], "field": {...}}   (+ "rho": [...] for cyclic)
//   job     {"field": {...}, "k": 4, "g_set": [1, 3], "target": "INVOLUTORY_MDS",
//            "row_space": {"kind": "EXHAUSTIVE"} | {"kind": "RANDOM", "count": n, "seed": s}
//                       | {"kind": "CONSTRAINED_LEFT_CIRCULANT"},
//            "resume_token": p, "end_position": p, "prune": {...}, "audit_pruned": false, "threads": 1}
//
// Element strings accept hex or polynomial syntax on input; output is hex.

#include <json.hpp>

#include "gcirc/circulant.hpp"
#include "gcirc/field.hpp"
#include "gcirc/matrix.hpp"
#include "gcirc/modular.hpp"
#include "gcirc/properties.hpp"
#include "gcirc/search.hpp"

namespace gcirc::io {

using nlohmann::json;

json field_to_json(const Field& f);
/// CONFIG_ERROR on missing keys; REDUCIBLE_MODULUS / BAD_DEGREE from the field.
FieldPtr field_from_json(const json& j);
/// Parses "0x165" or a bare decimal integer string.
std::uint32_t parse_modulus(const std::string& text);

json element_to_json(const Field& f, Element e);
Element element_from_json(const Field& f, const json& j);
json elements_to_json(const Field& f, std::span<const Element> v);
std::vector<Element> elements_from_json(const Field& f, const json& j);

json matrix_to_json(const Matrix& a);
/// Uses the embedded "field" when present, else `fallback`.
Matrix matrix_from_json(const json& j, FieldPtr fallback = nullptr);

json spec_to_json(const GCirculantSpec& s);
GCirculantSpec spec_from_json(const json& j, FieldPtr fallback = nullptr);
CyclicSpec cyclic_spec_from_json(const json& j, FieldPtr fallback = nullptr);

json pair_to_json(const Field& f, const DiagonalPair& p);
json report_to_json(const Field& f, const PropertyReport& r);

json sqrt_one_to_json(const SqrtOneSolutions& s);

SearchJob job_from_json(const json& j, FieldPtr fallback = nullptr);
json job_to_json(const SearchJob& job);
json result_to_json(const SearchResult& r);
json summary_to_json(const SearchSummary& s);

}  // namespace gcirc::io
