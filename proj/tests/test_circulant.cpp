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
#include <doctest.h>

#include <algorithm>

#include "gcirc/circulant.hpp"
#include "gcirc/repro.hpp"
#include "support.hpp"

using namespace gcirc;
using gcirc::test::error_of;

namespace {
const FieldPtr gf4 = make_field(2, 0x7);
const FieldPtr gf16 = make_field(4, 0x13);
const FieldPtr gf256 = make_field(8, 0x165);

std::vector<Element> unit_row(std::size_t k, std::size_t at = 0) {
  std::vector<Element> r(k, zero());
  r[at] = one();
  return r;
}
}  // namespace

TEST_CASE("build_g_circulant entries") {
  const auto spec = repro::three_circulant_5x5();
  const Matrix a = build_g_circulant(spec);
  for (std::size_t j = 0; j < 5; ++j) CHECK(a(0, j) == spec.row[j]);
  CHECK(a(1, 3) == one());
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = 0; j < 5; ++j) REQUIRE(a(i, j) == spec.row[(j + 5 * 3 - i * 3) % 5]);

  std::mt19937_64 rng(1);
  const auto row = test::random_row(rng, *gf256, 6);
  const Matrix c = build_circulant(gf256, row);
  const Matrix l = build_left_circulant(gf256, row);
  for (std::size_t j = 0; j < 6; ++j) {
    CHECK(c(1, (j + 1) % 6) == row[j]);  // right rotation
    CHECK(l(1, j) == row[(j + 1) % 6]);  // left rotation
  }
  CHECK(build_circulant(gf256, {Element{7}}) == Matrix::from_rows(gf256, {{Element{7}}}));
  CHECK(GCirculantSpec(gf256, 13, row).g == 1);
  CHECK(GCirculantSpec(gf256, 4, row).gcd_with_order() == 2);
}

TEST_CASE("g_shift_cycle") {
  const Permutation c = g_shift_cycle(5, 3);
  std::vector<std::size_t> orbit{0};
  for (int i = 0; i < 4; ++i) orbit.push_back(c(orbit.back()));
  CHECK(orbit == std::vector<std::size_t>{0, 3, 1, 4, 2});
  const Permutation r = g_shift_cycle(7, 1);
  for (std::size_t j = 0; j < 7; ++j) CHECK(r(j) == (j + 1) % 7);
  CHECK(error_of([] { g_shift_cycle(4, 2); }) == Errc::NotCoprime);
}

TEST_CASE("build_cyclic") {
  std::mt19937_64 rng(2);
  const std::size_t k = 6;
  const auto row = test::random_row(rng, *gf256, k);
  std::vector<std::size_t> rot(k), down(k);
  for (std::size_t j = 0; j < k; ++j) {
    rot[j] = (j + 1) % k;
    down[j] = (j + k - 1) % k;
  }
  CHECK(build_cyclic(CyclicSpec(gf256, Permutation(rot), row)) == build_circulant(gf256, row));
  CHECK(build_cyclic(CyclicSpec(gf256, Permutation(down), row)) == build_left_circulant(gf256, row));
  // The literal cycle (0 k-1 1 2 ... k-2) yields a left-circulant only for k = 3.
  const auto row3 = test::random_row(rng, *gf256, 3);
  CHECK(build_cyclic(CyclicSpec(gf256, Permutation({2, 0, 1}), row3)) == build_left_circulant(gf256, row3));
  CHECK(error_of([&] { CyclicSpec(gf256, Permutation({1, 0, 3, 2, 5, 4}), row); }) == Errc::NotAKCycle);
  CHECK(error_of([&] { CyclicSpec(gf256, Permutation({1, 2, 0}), row); }) == Errc::NotAKCycle);

  for (std::size_t kk = 2; kk <= 9; ++kk)
    for (std::size_t g = 1; g < kk; ++g) {
      if (gcd(g, kk) != 1) continue;
      const auto r = test::random_row(rng, *gf256, kk);
      REQUIRE(build_cyclic(CyclicSpec(gf256, g_shift_cycle(kk, g), r)) == build_g_circulant(GCirculantSpec(gf256, g, r)));
    }
}

TEST_CASE("permutation representation") {
  std::mt19937_64 rng(3);
  for (int n = 0; n < 300; ++n) {
    const auto spec = test::random_coprime_spec(rng, gf16, 2, 9);
    const auto form = permutation_representation(spec);
    REQUIRE(form.reconstruction == build_g_circulant(spec));
    // independent reconstruction: sum_i c_i Q_g P^i
    const Matrix q = build_g_circulant(GCirculantSpec(gf16, spec.g, unit_row(spec.k)));
    const Matrix p = build_circulant(gf16, unit_row(spec.k, 1));
    REQUIRE(to_matrix(gf16, form.q_g) == q);
    REQUIRE(to_matrix(gf16, form.p) == p);
    Matrix sum(gf16, spec.k, spec.k), pi = Matrix::identity(gf16, spec.k);
    for (std::size_t i = 0; i < spec.k; ++i) {
      sum = sum + spec.row[i] * (q * pi);
      pi = pi * p;
    }
    REQUIRE(sum == build_g_circulant(spec));
    REQUIRE(pi.is_identity());                              // P^k = I
    REQUIRE(p * q == q * to_matrix(gf16, power(form.p, static_cast<std::int64_t>(spec.g))));  // P Q_g = Q_g P^g
  }
  const auto circ = permutation_representation(GCirculantSpec(gf16, 1, test::random_row(rng, *gf16, 5)));
  CHECK(circ.q_g == Permutation::identity(5));
  const auto e0 = GCirculantSpec(gf16, 3, unit_row(5));
  CHECK(permutation_representation(e0).reconstruction == to_matrix(gf16, permutation_representation(e0).q_g));
  CHECK(error_of([] { permutation_representation(GCirculantSpec(gf16, 2, unit_row(4))); }) == Errc::NotCoprime);
}

TEST_CASE("detect_g_circulant") {
  std::mt19937_64 rng(4);
  for (std::size_t k = 2; k <= 8; ++k)
    for (std::size_t g = 0; g < k; ++g) {
      std::vector<Element> row(k);
      for (std::size_t j = 0; j < k; ++j) row[j] = Element{static_cast<std::uint32_t>(j + 1)};  // distinct
      const auto d = detect_g_circulant(build_g_circulant(GCirculantSpec(gf256, g, row)));
      REQUIRE(d.has_value());
      CHECK(d->g == g);
      CHECK(d->row == row);
    }
  Matrix flat(gf16, 4, 4);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) flat(i, j) = Element{5};
  REQUIRE(detect_g_circulant(flat).has_value());
  CHECK(detect_g_circulant(flat)->g == 0);
  int rejected = 0;
  for (int n = 0; n < 100; ++n) {
    const Matrix a = test::random_matrix(rng, gf256, 5, 5);
    bool any = false;
    for (std::size_t g = 0; g < 5; ++g) any = any || satisfies_shift(a, g);
    CHECK(detect_g_circulant(a).has_value() == any);
    rejected += !any;
  }
  CHECK(rejected == 100);
}

TEST_CASE("square_structured") {
  const auto spec = repro::three_circulant_5x5();
  const auto sq = square_structured(spec);
  CHECK(sq.g2 == 4);
  CHECK(sq.row2[0] == gf256->parse("a^6+1"));
  const Matrix a = build_g_circulant(spec);
  CHECK((a * a)(1, 4) == gf256->parse("a^6+1"));

  const auto e0 = square_structured(GCirculantSpec(gf16, 3, unit_row(5)));
  CHECK(e0.row2 == unit_row(5));
  CHECK(e0.g2 == 4);
  CHECK(error_of([] { square_structured(GCirculantSpec(gf16, 2, unit_row(4))); }) == Errc::NotCoprime);

  std::mt19937_64 rng(5);
  for (const FieldPtr& f : {gf16, gf256})
    for (int n = 0; n < 500; ++n) {
      const auto s = test::random_coprime_spec(rng, f, 2, 8);
      const auto q = square_structured(s);
      const Matrix m = build_g_circulant(s);
      REQUIRE(build_g_circulant(GCirculantSpec(f, q.g2, q.row2)) == test::naive_product(m, m));
    }
}

TEST_CASE("shift laws") {
  const auto row5 = std::vector<Element>{Element{1}, Element{2}, Element{3}, Element{4}, Element{5}};
  CHECK(product_shift_law(GCirculantSpec(gf16, 1, row5), GCirculantSpec(gf16, 1, row5)) == 1);
  CHECK(product_shift_law(GCirculantSpec(gf16, 3, row5), GCirculantSpec(gf16, 2, row5)) == 1);
  CHECK(product_shift_law(GCirculantSpec(gf16, 4, row5), GCirculantSpec(gf16, 4, row5)) == 1);

  std::mt19937_64 rng(6);
  int inverted = 0;
  for (int n = 0; n < 500; ++n) {
    const auto s = test::random_coprime_spec(rng, gf256, 2, 8);
    const Matrix a = build_g_circulant(s);
    const std::size_t ginv = mod_inverse(s.g, s.k);
    // P A = A P^g with P = circulant(0,1,0,...)
    const Matrix p = build_circulant(gf256, unit_row(s.k, 1));
    Matrix pg = Matrix::identity(gf256, s.k);
    for (std::size_t i = 0; i < s.g; ++i) pg = pg * p;
    REQUIRE(p * a == a * pg);
    REQUIRE(satisfies_shift(transpose(a), ginv));
    CHECK(transpose_shift_law(s).g == ginv % s.k);
    if (!determinant(a).is_zero()) {
      ++inverted;
      const auto inv = inverse_shift_law(s);
      REQUIRE(satisfies_shift(inverse(a), ginv));
      CHECK(build_g_circulant(GCirculantSpec(gf256, inv.g, inv.row)) == inverse(a));
    } else {
      CHECK(error_of([&] { inverse_shift_law(s); }) == Errc::Singular);
    }
    std::size_t h = 1 + rng() % s.k;
    while (gcd(h % s.k, s.k) != 1) h = 1 + rng() % s.k;
    const GCirculantSpec t(gf256, h, test::random_row(rng, *gf256, s.k));
    REQUIRE(product_shift_law(s, t) == (s.g * t.g) % s.k);
    REQUIRE(satisfies_shift(a * build_g_circulant(t), (s.g * t.g) % s.k));
  }
  CHECK(inverted > 400);
  CHECK(error_of([&] { inverse_shift_law(GCirculantSpec(gf16, 2, unit_row(4))); }) == Errc::NotCoprime);
}

TEST_CASE("cyclic_to_circulant") {
  std::mt19937_64 rng(7);
  const std::size_t k = 6;
  const auto row = test::random_row(rng, *gf256, k);
  std::vector<std::size_t> rot(k), down(k);
  for (std::size_t j = 0; j < k; ++j) {
    rot[j] = (j + 1) % k;
    down[j] = (j + k - 1) % k;
  }
  const auto std_form = cyclic_to_circulant(CyclicSpec(gf256, Permutation(rot), row));
  CHECK(std_form.q == Permutation::identity(k));
  CHECK(std_form.circ_row == row);
  const auto left = cyclic_to_circulant(CyclicSpec(gf256, Permutation(down), row));
  CHECK(left.circ_row == std::vector<Element>{row[0], row[5], row[4], row[3], row[2], row[1]});

  for (int n = 0; n < 200; ++n) {
    const std::size_t kk = 2 + rng() % 7;
    // random k-cycle: shuffle 1..k-1 and chain from 0
    std::vector<std::size_t> order(kk);
    for (std::size_t j = 0; j < kk; ++j) order[j] = j;
    std::shuffle(order.begin() + 1, order.end(), rng);
    std::vector<std::size_t> images(kk);
    for (std::size_t j = 0; j < kk; ++j) images[order[j]] = order[(j + 1) % kk];
    const CyclicSpec spec(gf256, Permutation(images), test::random_row(rng, *gf256, kk));
    const auto form = cyclic_to_circulant(spec);
    const Matrix q = to_matrix(gf256, form.q);
    REQUIRE(build_cyclic(spec) * q == build_circulant(gf256, form.circ_row));
    REQUIRE((q * transpose(q)).is_identity());
    REQUIRE(inverse(q) == build_cyclic(CyclicSpec(gf256, spec.rho, unit_row(kk))));
    for (std::size_t i = 0; i < kk; ++i) REQUIRE(q(form.q(i), i) == one());
  }
}

TEST_CASE("left_circulant_submatrices") {
  std::mt19937_64 rng(8);
  for (std::size_t d = 2; d <= 4; ++d) {
    const std::size_t k = std::size_t{1} << d;
    const auto row = test::random_row(rng, *gf256, k);
    const auto [even, odd] = left_circulant_submatrices(GCirculantSpec(gf256, k / 2 - 1, row));
    std::vector<Element> er, orow;
    for (std::size_t j = 0; j < k; j += 2) {
      er.push_back(row[j]);
      orow.push_back(row[j + 1]);
    }
    CHECK(even == build_left_circulant(gf256, er));
    CHECK(odd == build_left_circulant(gf256, orow));
    CHECK(satisfies_shift(even, k / 2 - 1));
  }
  const auto [e1, o1] = left_circulant_submatrices(GCirculantSpec(gf16, 3, std::vector<Element>(8, one())));
  for (auto e : e1.entries()) CHECK(e == one());
  for (auto e : o1.entries()) CHECK(e == one());
  CHECK(error_of([] { left_circulant_submatrices(GCirculantSpec(gf16, 1, unit_row(6))); }) == Errc::BadOrder);
  CHECK(error_of([] { left_circulant_submatrices(GCirculantSpec(gf16, 1, unit_row(8))); }) == Errc::BadOrder);
  CHECK(error_of([] { left_circulant_submatrices(GCirculantSpec(gf16, 1, unit_row(2))); }) == Errc::BadOrder);
}

TEST_CASE("the k/2 square coefficient of a 2^d left-circulant vanishes") {
  // With g = k - 1 the pairs (i, j) with gi + j = k/2 pair off symmetrically in characteristic 2.
  std::mt19937_64 rng(9);
  for (std::size_t d = 1; d <= 4; ++d) {
    const std::size_t k = std::size_t{1} << d;
    for (int n = 0; n < 50; ++n) {
      const auto row = test::random_row(rng, *gf256, k);
      REQUIRE(square_coefficient(*gf256, row, k - 1, k / 2) == zero());
    }
  }
}
