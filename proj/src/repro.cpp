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
#include "gcirc/repro.hpp"

#include <algorithm>
#include <initializer_list>

#include "gcirc/error.hpp"

namespace gcirc::repro {

namespace {

std::vector<Element> parse_all(const Field& f, std::initializer_list<const char*> lits) {
  std::vector<Element> out;
  for (auto s : lits) out.push_back(f.parse(s));
  return out;
}

FieldPtr gf256_0x165() {
  static const FieldPtr f = make_field(8, 0x165);
  return f;
}
FieldPtr gf256_0x11d() {
  static const FieldPtr f = make_field(8, 0x11D);
  return f;
}
FieldPtr gf4() {
  static const FieldPtr f = make_field(2, 0x7);
  return f;
}
FieldPtr gf16() {
  static const FieldPtr f = make_field(4, 0x13);
  return f;
}

std::vector<Element> shared_5x5_row() {
  return parse_all(*gf256_0x165(), {"1", "a", "1+a+a^4+a^5+a^7", "1+a+a^3+a^4+a^5+a^7", "a+a^3"});
}

class FactList {
 public:
  explicit FactList(const Field& f) : f_(f) {}

  void check(std::string name, bool pass, std::string detail = {}) {
    facts_.push_back(Fact{std::move(name), pass, std::move(detail)});
  }
  void equal(std::string name, Element got, Element want) {
    check(std::move(name), got == want, "got " + f_.format_poly(got) + ", expected " + f_.format_poly(want));
  }
  void equal(std::string name, const std::vector<Element>& got, const std::vector<Element>& want) {
    std::string d = "got (";
    for (std::size_t i = 0; i < got.size(); ++i) d += (i ? ", " : "") + f_.format_poly(got[i]);
    check(std::move(name), got == want, d + ")");
  }
  std::vector<Fact> take() { return std::move(facts_); }

 private:
  const Field& f_;
  std::vector<Fact> facts_;
};

Report three_circ() {
  const auto spec = three_circulant_5x5();
  const Field& f = *spec.field;
  FactList facts(f);
  const Element a6_plus_1 = f.parse("a^6+1");
  const Matrix a = build_g_circulant(spec);
  const Matrix a2 = a * a;
  const auto sq = square_structured(spec);
  facts.check("3^2 = 4 (mod 5)", sq.g2 == 4, "g2 = " + std::to_string(sq.g2));
  facts.check("involutory_g_filter(3, 5) excludes g", !involutory_g_filter(3, 5));
  facts.equal("structured row2[0] = a^6+1", sq.row2[0], a6_plus_1);
  facts.equal("A^2[0,0] = a^6+1", a2(0, 0), a6_plus_1);
  facts.equal("A^2[1,4] = a^6+1", a2(1, 4), a6_plus_1);
  facts.check("A^2 is 4-circulant", satisfies_shift(a2, 4));
  facts.check("A^2 equals 4-circulant(row2)", build_g_circulant(GCirculantSpec(spec.field, sq.g2, sq.row2)) == a2);
  facts.check("A is not involutory", !is_involutory(a));
  return {"ex-3circ-5x5", "3-circulant 5x5 over GF(2^8), modulus 1+x^2+x^5+x^6+x^8", facts.take()};
}

Report left_circ() {
  const auto spec = left_circulant_5x5();
  const Field& f = *spec.field;
  FactList facts(f);
  Element sum = zero();
  for (auto c : spec.row) sum += c;
  facts.equal("sum c_i = 1", sum, one());
  facts.equal("sum_{4i+j=1} c_i c_j = 0", square_coefficient(f, spec.row, 4, 1), zero());
  facts.equal("sum_{4i+j=2} c_i c_j = 0", square_coefficient(f, spec.row, 4, 2), zero());
  facts.check("involutory conditions hold", left_circulant_involutory_conditions(f, spec.row));
  const Matrix a = build_g_circulant(spec);
  facts.check("A^2 = I", is_involutory(a));
  const auto mds = is_mds(a);
  facts.check("every square submatrix nonsingular", mds.mds,
              std::to_string(mds.minors_checked) + " minors checked");
  facts.check("A is symmetric", transpose(a) == a);
  return {"ex-leftcirc-5x5", "left-circulant 5x5 over GF(2^8), modulus 1+x^2+x^5+x^6+x^8", facts.take()};
}

Report semi_pair(const char* id, const char* title, const GCirculantSpec& spec, const DiagonalPair& stated,
                 bool orthogonal, const char* k1_text, const char* k2_text, bool claims_mds) {
  const Field& f = *spec.field;
  FactList facts(f);
  const Matrix a = build_g_circulant(spec);
  const Matrix target = orthogonal ? transpose(inverse(a)) : inverse(a);
  const Matrix stated_product =
      Matrix::diagonal(spec.field, stated.d1) * a * Matrix::diagonal(spec.field, stated.d2);
  facts.check(orthogonal ? "stated D1 A D2 = A^{-T}" : "stated D1 A D2 = A^{-1}", stated_product == target);

  const auto detected = orthogonal ? detect_semi_orthogonal(a) : detect_semi_involutory(a);
  facts.check(orthogonal ? "detect_semi_orthogonal succeeds" : "detect_semi_involutory succeeds",
              detected.has_value());
  if (detected) {
    const DiagonalPair scaled = detect_in_stated_scaling(a, stated, orthogonal);
    facts.equal("D1 matches after rescaling", scaled.d1, stated.d1);
    facts.equal("D2 matches after rescaling", scaled.d2, stated.d2);
    const auto comps = ratio_components(a);
    const DiagonalPair canon_detected = normalize_scaling(f, *detected, comps);
    const DiagonalPair canon_stated = normalize_scaling(f, stated, comps);
    facts.check("normal forms agree", canon_detected.d1 == canon_stated.d1 && canon_detected.d2 == canon_stated.d2);
    const auto k = spec.k;
    const auto k1 = diagonal_power_scalar(f, scaled.d1, k);
    const auto k2 = diagonal_power_scalar(f, scaled.d2, k);
    facts.check("D1^k is scalar", k1.has_value());
    facts.check("D2^k is scalar", k2.has_value());
    if (k1) facts.equal(std::string("k1 = ") + k1_text, *k1, f.parse(k1_text));
    if (k2) facts.equal(std::string("k2 = ") + k2_text, *k2, f.parse(k2_text));
  }
  if (claims_mds) facts.check("A is MDS", is_mds(a).mds);
  return {id, title, facts.take()};
}

}  // namespace

GCirculantSpec three_circulant_5x5() { return GCirculantSpec(gf256_0x165(), 3, shared_5x5_row()); }

GCirculantSpec left_circulant_5x5() { return GCirculantSpec(gf256_0x165(), 4, shared_5x5_row()); }

GCirculantSpec semi_orthogonal_5x5() {
  return GCirculantSpec(gf256_0x11d(), 1,
                        parse_all(*gf256_0x11d(), {"1", "1+a+a^3", "1+a+a^3", "a+a^3", "1+a^3+a^4+a^7"}));
}

// a^2 is not a reduced literal in GF(4); a^2 = a+1.
GCirculantSpec semi_involutory_2x2() { return GCirculantSpec(gf4(), 1, parse_all(*gf4(), {"1", "a+1"})); }

GCirculantSpec semi_involutory_4x4() {
  return GCirculantSpec(gf16(), 1, parse_all(*gf16(), {"a", "a^3", "a^2+a+1", "a^3"}));
}

DiagonalPair semi_orthogonal_5x5_pair() {
  const Field& f = *gf256_0x11d();
  DiagonalPair p;
  p.d1 = parse_all(f, {"a^2+a", "a^7+a^2+1", "a^7+a^6+a^5+a^4+a^2", "a^5+a^4+a^3+a^2", "a^6+a^3+a+1"});
  p.d2 = parse_all(f, {"a^7+a^6+a^3+a^2+a+1", "a^7+a^5+a^3", "a^7+a^5+a^4+a^2+1", "a^6+a^5+a^2",
                       "a^7+a^5+a^4+a^2+a"});
  return p;
}

DiagonalPair semi_involutory_2x2_pair() {
  const Field& f = *gf4();
  return DiagonalPair{parse_all(f, {"a", "a"}), parse_all(f, {"1", "1"}), {}, {}};
}

DiagonalPair semi_involutory_4x4_pair() {
  const Field& f = *gf16();
  return DiagonalPair{parse_all(f, {"a^3+1", "a^3+1", "a^3+1", "a^3+1"}), parse_all(f, {"1", "1", "1", "1"}), {}, {}};
}

DiagonalPair detect_in_stated_scaling(const Matrix& a, const DiagonalPair& stated, bool orthogonal) {
  const auto detected = orthogonal ? detect_semi_orthogonal(a) : detect_semi_involutory(a);
  if (!detected) throw Error(Errc::LawViolation, "no diagonal pair exists");
  const auto comps = ratio_components(a);
  std::vector<Element> anchors;
  for (const auto& c : comps) anchors.push_back(c.cols.empty() ? one() : stated.d2[c.cols.front()]);
  return normalize_scaling(a.field(), *detected, comps, anchors);
}

bool Report::passed() const noexcept {
  return !facts.empty() && std::all_of(facts.begin(), facts.end(), [](const Fact& f) { return f.pass; });
}

const std::vector<std::string_view>& example_ids() {
  static const std::vector<std::string_view> ids{"ex-3circ-5x5", "ex-leftcirc-5x5", "ex-semiortho-5x5",
                                                 "ex-semiinv-2x2", "ex-semiinv-4x4"};
  return ids;
}

Report run(std::string_view id) {
  if (id == "ex-3circ-5x5") return three_circ();
  if (id == "ex-leftcirc-5x5") return left_circ();
  if (id == "ex-semiortho-5x5") {
    return semi_pair("ex-semiortho-5x5", "semi-orthogonal circulant 5x5 over GF(2^8), modulus x^8+x^4+x^3+x^2+1",
                     semi_orthogonal_5x5(), semi_orthogonal_5x5_pair(), true, "a^5+a^3+a^2+a", "a^6+a^4+a^3+1",
                     true);
  }
  if (id == "ex-semiinv-2x2") {
    return semi_pair("ex-semiinv-2x2", "semi-involutory circulant(1, a^2) over GF(4)", semi_involutory_2x2(),
                     semi_involutory_2x2_pair(), false, "a+1", "1", true);
  }
  if (id == "ex-semiinv-4x4") {
    return semi_pair("ex-semiinv-4x4", "semi-involutory circulant 4x4 over GF(16), modulus x^4+x+1",
                     semi_involutory_4x4(), semi_involutory_4x4_pair(), false, "a^3+a^2+a", "1", false);
  }
  throw Error(Errc::UsageError, "unknown example id \"" + std::string(id) + "\"");
}

}  // namespace gcirc::repro
