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
#include "gcirc/matrix.hpp"
#include "support.hpp"

using namespace gcirc;
using gcirc::test::error_of;

namespace {
const FieldPtr gf4 = make_field(2, 0x7);
const FieldPtr gf16 = make_field(4, 0x13);
const FieldPtr gf256 = make_field(8, 0x165);
}  // namespace

TEST_CASE("products with the identity and dimension checks") {
  std::mt19937_64 rng(1);
  const Matrix a = test::random_matrix(rng, gf16, 3, 4);
  CHECK(a * Matrix::identity(gf16, 4) == a);
  CHECK(Matrix::identity(gf16, 3) * a == a);
  CHECK(error_of([&] { a * a; }) == Errc::DimMismatch);
  CHECK(error_of([&] { a + transpose(a); }) == Errc::DimMismatch);
  CHECK(error_of([&] { determinant(a); }) == Errc::DimMismatch);
  CHECK(error_of([&] { Matrix::identity(gf16, 2) * Matrix::identity(gf4, 2); }) == Errc::DimMismatch);
  CHECK(error_of([] { Matrix(gf16, kMaxDimension + 1, 1); }) == Errc::TooLarge);
}

TEST_CASE("circulant(1, a^2) over GF(4)") {
  const Element a2 = gf4->parse("a+1");
  const Matrix c = build_circulant(gf4, {one(), a2});
  CHECK((c * c)(0, 0) == gf4->parse("a+1"));  // 1 + a^4 = 1 + a
  CHECK(determinant(c) == a2);
  const Matrix d1 = Matrix::diagonal(gf4, std::vector<Element>{Element{2}, Element{2}});
  CHECK(inverse(c) == d1 * c * Matrix::identity(gf4, 2));
}

TEST_CASE("transpose") {
  std::mt19937_64 rng(2);
  CHECK(transpose(Matrix::identity(gf256, 5)) == Matrix::identity(gf256, 5));
  const Matrix a = test::random_matrix(rng, gf256, 3, 5);
  CHECK(transpose(transpose(a)) == a);
  CHECK(transpose(a).rows() == 5);
  const auto row = test::random_row(rng, *gf256, 6);
  const Matrix l = build_left_circulant(gf256, row);
  CHECK(transpose(l) == l);
}

TEST_CASE("determinant basics") {
  CHECK(determinant(Matrix::identity(gf16, 4)) == one());
  std::mt19937_64 rng(3);
  Matrix a = test::random_matrix(rng, gf16, 4, 4);
  for (std::size_t j = 0; j < 4; ++j) a(2, j) = zero();
  CHECK(determinant(a) == zero());
  CHECK(error_of([&] { inverse(a); }) == Errc::Singular);
}

TEST_CASE("determinant: cofactor oracle, multiplicativity and transpose") {
  std::mt19937_64 rng(4);
  for (const FieldPtr& f : {gf4, gf16, gf256}) {
    for (int n = 0; n < 400; ++n) {
      const std::size_t k = 1 + rng() % 4;
      Matrix a = test::random_matrix(rng, f, k, k);
      // sparse entries make zero pivots (and row swaps) common
      if (n % 2)
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = 0; j < k; ++j)
            if (rng() % 3 == 0) a(i, j) = zero();
      const Matrix b = test::random_matrix(rng, f, k, k);
      REQUIRE(determinant(a) == test::cofactor_det(a));
      REQUIRE(determinant(a * b) == f->mul(determinant(a), determinant(b)));
      REQUIRE(determinant(transpose(a)) == determinant(a));
    }
  }
}

TEST_CASE("inverse round trips") {
  std::mt19937_64 rng(5);
  CHECK(inverse(Matrix::identity(gf256, 6)) == Matrix::identity(gf256, 6));
  int nonsingular = 0;
  for (int n = 0; n < 300; ++n) {
    const std::size_t k = 1 + rng() % 7;
    const Matrix a = test::random_matrix(rng, gf256, k, k);
    if (determinant(a).is_zero()) {
      CHECK(error_of([&] { inverse(a); }) == Errc::Singular);
      continue;
    }
    ++nonsingular;
    const Matrix inv = inverse(a);
    REQUIRE((a * inv).is_identity());
    REQUIRE((inv * a).is_identity());
    REQUIRE(inverse(inv) == a);
  }
  CHECK(nonsingular > 250);
}

TEST_CASE("multiply agrees with the entrywise reference") {
  std::mt19937_64 rng(6);
  for (int n = 0; n < 100; ++n) {
    const std::size_t r = 1 + rng() % 6, c = 1 + rng() % 6, s = 1 + rng() % 6;
    const Matrix a = test::random_matrix(rng, gf256, r, c), b = test::random_matrix(rng, gf256, c, s);
    REQUIRE(a * b == test::naive_product(a, b));
  }
}

TEST_CASE("submatrix") {
  std::mt19937_64 rng(7);
  const Matrix a = test::random_matrix(rng, gf16, 4, 4);
  const std::vector<std::size_t> all{0, 1, 2, 3};
  CHECK(submatrix(a, all, all) == a);
  const std::vector<std::size_t> r0{0}, c2{2};
  const Matrix s = submatrix(a, r0, c2);
  CHECK(s.rows() == 1);
  CHECK(s(0, 0) == a(0, 2));
  const std::vector<std::size_t> bad_order{2, 1}, dup{1, 1}, out{0, 4};
  CHECK(error_of([&] { submatrix(a, bad_order, c2); }) == Errc::BadIndex);
  CHECK(error_of([&] { submatrix(a, dup, c2); }) == Errc::BadIndex);
  CHECK(error_of([&] { submatrix(a, r0, out); }) == Errc::BadIndex);
}

TEST_CASE("a 2^(d-1)+1 circulant minor that the involutory condition makes singular") {
  // rows {0, 2^{d-1}}, cols {2^{d-2}, 3*2^{d-2}}: the entries swap along the antidiagonal, so the
  // determinant is (c_q + c_3q)^2, which vanishes once A^2 = I forces c_q = c_3q.
  std::mt19937_64 rng(8);
  for (std::size_t d = 2; d <= 4; ++d) {
    const std::size_t k = std::size_t{1} << d, half = k / 2, q = k / 4;
    auto row = test::random_row(rng, *gf256, k);
    const std::vector<std::size_t> rows{0, half}, cols{q, 3 * q};
    const Matrix m = submatrix(build_g_circulant(GCirculantSpec(gf256, half + 1, row)), rows, cols);
    CHECK(m(0, 0) == row[q]);
    CHECK(m(0, 0) == m(1, 1));
    CHECK(m(0, 1) == m(1, 0));
    CHECK(determinant(m) == gf256->pow(row[q] + row[3 * q], 2));
    row[3 * q] = row[q];
    CHECK(determinant(submatrix(build_g_circulant(GCirculantSpec(gf256, half + 1, row)), rows, cols)) == zero());
  }
}

TEST_CASE("permutations") {
  const std::size_t k = 6;
  CHECK(to_matrix(gf16, Permutation::identity(k)) == Matrix::identity(gf16, k));
  std::vector<std::size_t> down(k);
  for (std::size_t j = 0; j < k; ++j) down[j] = (j + k - 1) % k;
  const Permutation p(down);
  CHECK(p.is_full_cycle());
  std::vector<Element> e1(k, zero());
  e1[1] = one();
  CHECK(to_matrix(gf16, p) == build_circulant(gf16, e1));
  CHECK(power(p, static_cast<std::int64_t>(k)) == Permutation::identity(k));
  CHECK(power(p, -1) == inverse(p));
  CHECK(compose(p, inverse(p)) == Permutation::identity(k));
  CHECK(error_of([] { Permutation({0, 0, 1}); }) == Errc::BadIndex);
  CHECK(error_of([] { Permutation({0, 3}); }) == Errc::BadIndex);

  std::mt19937_64 rng(9);
  for (int n = 0; n < 200; ++n) {
    std::vector<std::size_t> a(k), b(k);
    for (std::size_t j = 0; j < k; ++j) a[j] = b[j] = j;
    std::shuffle(a.begin(), a.end(), rng);
    std::shuffle(b.begin(), b.end(), rng);
    const Permutation pa(a), pb(b);
    const Matrix ma = to_matrix(gf16, pa), mb = to_matrix(gf16, pb);
    REQUIRE(ma * mb == to_matrix(gf16, compose(pa, pb)));
    REQUIRE((ma * transpose(ma)).is_identity());
    REQUIRE(compose(pa, pb)(3) == pa(pb(3)));
  }
}
