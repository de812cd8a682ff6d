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

#include "gcirc/field.hpp"
#include "support.hpp"

using namespace gcirc;
using gcirc::test::error_of;

namespace {

// Carry-less product then reduction by long division; independent of Field.
std::uint32_t ref_mul(std::uint32_t a, std::uint32_t b, unsigned m, std::uint32_t modulus) {
  std::uint64_t p = 0;
  for (unsigned i = 0; i < 16; ++i)
    if (b >> i & 1u) p ^= static_cast<std::uint64_t>(a) << i;
  for (int d = 31; d >= static_cast<int>(m); --d)
    if (p >> d & 1u) p ^= static_cast<std::uint64_t>(modulus) << (d - static_cast<int>(m));
  return static_cast<std::uint32_t>(p);
}

struct Config {
  unsigned m;
  std::uint32_t modulus;
};
const Config kConfigs[] = {{1, 0x3}, {2, 0x7}, {3, 0xB}, {4, 0x13}, {8, 0x165}, {8, 0x11D}, {12, 0x1053}, {16, 0x1100B}};

}  // namespace

TEST_CASE("context construction") {
  CHECK_NOTHROW(make_field(8, 0x165));
  CHECK_NOTHROW(make_field(8, 0x11D));
  CHECK_NOTHROW(make_field(2, 0x7));
  CHECK(error_of([] { make_field(4, 0x18); }) == Errc::ReducibleModulus);
  CHECK(error_of([] { make_field(4, 0x15); }) == Errc::ReducibleModulus);  // (x^2+x+1)^2
  CHECK(error_of([] { make_field(4, 0x0B); }) == Errc::BadDegree);
  CHECK(error_of([] { make_field(0, 0x1); }) == Errc::BadDegree);
  CHECK(error_of([] { make_field(17, 0x3002B); }) == Errc::BadDegree);
  CHECK(is_irreducible(8, 0x165));
  CHECK(is_irreducible(8, 0x11B));
  CHECK_FALSE(is_irreducible(8, 0x101));
}

TEST_CASE("addition is xor") {
  CHECK((Element{0x05} + Element{0x05}) == zero());
  CHECK((Element{0x02} + Element{0x01}) == Element{0x03});
  CHECK((Element{0x1B} + Element{0x0D}) == Element{0x16});
}

TEST_CASE("multiplication examples") {
  CHECK(make_field(8, 0x11D)->mul(Element{0x02}, Element{0x80}) == Element{0x1D});
  CHECK(make_field(8, 0x165)->mul(Element{0x02}, Element{0x80}) == Element{0x65});
  CHECK(make_field(2, 0x7)->mul(Element{0x02}, Element{0x02}) == Element{0x03});
}

TEST_CASE("inverse examples") {
  auto gf4 = make_field(2, 0x7);
  auto gf16 = make_field(4, 0x13);
  CHECK(gf4->inv(Element{0x02}) == Element{0x03});
  CHECK(gf16->inv(Element{0x02}) == Element{0x09});
  for (const auto& c : kConfigs) CHECK(make_field(c.m, c.modulus)->inv(one()) == one());
  CHECK(error_of([&] { gf16->inv(zero()); }) == Errc::DivisionByZero);
  CHECK(error_of([&] { gf16->div(one(), zero()); }) == Errc::DivisionByZero);
}

TEST_CASE("pow and primitivity") {
  auto gf4 = make_field(2, 0x7);
  auto gf16 = make_field(4, 0x13);
  CHECK(gf4->pow(Element{0x02}, 3) == one());
  CHECK(gf16->pow(Element{0x07}, 0) == one());
  CHECK(gf16->pow(zero(), 0) == one());
  CHECK(gf16->pow(Element{0x07}, 1) == Element{0x07});
  CHECK(gf4->is_primitive(Element{0x02}));
  CHECK(gf16->is_primitive(Element{0x02}));
  CHECK_FALSE(gf16->is_primitive(one()));
  CHECK_FALSE(gf16->is_primitive(zero()));
  // a^3 has order 5 in GF(16)
  CHECK_FALSE(gf16->is_primitive(Element{0x08}));
  CHECK(make_field(8, 0x165)->is_primitive(Element{0x02}));
  CHECK(make_field(8, 0x11D)->is_primitive(Element{0x02}));
  // x is not primitive modulo the AES polynomial; x+1 is.
  auto aes = make_field(8, 0x11B);
  CHECK_FALSE(aes->is_primitive(Element{0x02}));
  CHECK(aes->is_primitive(Element{0x03}));
}

TEST_CASE("parse and format") {
  auto f = make_field(8, 0x165);
  CHECK(f->parse("1+a+a^4+a^5+a^7") == Element{0xB3});
  CHECK(f->parse("0x01") == one());
  CHECK(f->parse("0") == zero());
  CHECK(f->parse("x^7 + x") == Element{0x82});
  CHECK(f->parse("a") == Element{0x02});
  CHECK(f->parse("a+a") == zero());
  CHECK(f->parse("0xB3") == f->parse("0xb3"));
  CHECK(error_of([&] { f->parse("a^9"); }) == Errc::OutOfRange);
  CHECK(error_of([&] { f->parse("0x1FF"); }) == Errc::OutOfRange);
  CHECK(error_of([&] { f->parse("1+b"); }) == Errc::ParseError);
  CHECK(error_of([&] { f->parse(""); }) == Errc::ParseError);
  CHECK(error_of([&] { f->parse("1++a"); }) == Errc::ParseError);
  CHECK(error_of([&] { f->parse("0xZZ"); }) == Errc::ParseError);
  try {
    f->parse("1+a+q");
    FAIL("expected PARSE_ERROR");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("position 4") != std::string::npos);
  }
  CHECK(f->format_hex(Element{0xB3}) == "0xb3");
  CHECK(f->format_poly(Element{0x41}) == "a^6+1");
  CHECK(f->format_poly(zero()) == "0");
  CHECK(f->format_poly(Element{0x03}) == "a+1");
  CHECK(make_field(12, 0x1053)->format_hex(Element{0x5}) == "0x0005");
}

TEST_CASE("parse after format is the identity for m <= 8") {
  for (const auto& c : kConfigs) {
    if (c.m > 8) continue;
    auto f = make_field(c.m, c.modulus);
    for (std::uint32_t v = 0; v < f->order(); ++v) {
      const Element e{v};
      REQUIRE(f->parse(f->format_hex(e)) == e);
      REQUIRE(f->parse(f->format_poly(e)) == e);
    }
  }
}

TEST_CASE("multiplication agrees with an independent reference") {
  for (const auto& c : kConfigs) {
    auto f = make_field(c.m, c.modulus);
    std::mt19937_64 rng(c.modulus);
    for (int n = 0; n < 2000; ++n) {
      const auto a = test::random_element(rng, *f), b = test::random_element(rng, *f);
      REQUIRE(f->mul(a, b).bits == ref_mul(a.bits, b.bits, c.m, c.modulus));
    }
  }
}

TEST_CASE("log-table path equals shift-reduce exhaustively") {
  for (const auto& c : kConfigs) {
    if (c.m > 8) continue;
    auto sr = make_field(c.m, c.modulus, MulMethod::ShiftReduce);
    auto lt = make_field(c.m, c.modulus, MulMethod::LogTable);
    CHECK(*sr == *lt);
    for (std::uint32_t a = 0; a < sr->order(); ++a)
      for (std::uint32_t b = 0; b < sr->order(); ++b)
        REQUIRE(sr->mul(Element{a}, Element{b}) == lt->mul(Element{a}, Element{b}));
  }
  CHECK(error_of([] { make_field(12, 0x1053, MulMethod::LogTable); }).has_value());
}

TEST_CASE("field axioms on random samples") {
  for (const auto& c : kConfigs) {
    CAPTURE(c.modulus);
    auto f = make_field(c.m, c.modulus);
    std::mt19937_64 rng(0x5eed + c.m);
    for (int n = 0; n < 10000; ++n) {
      const auto a = test::random_element(rng, *f), b = test::random_element(rng, *f),
                 d = test::random_element(rng, *f);
      REQUIRE(f->mul(a, b) == f->mul(b, a));
      REQUIRE(f->mul(f->mul(a, b), d) == f->mul(a, f->mul(b, d)));
      REQUIRE(f->mul(a, b + d) == f->mul(a, b) + f->mul(a, d));
      REQUIRE((a + b) + d == a + (b + d));
      REQUIRE(a + zero() == a);
      REQUIRE(a + a == zero());
      REQUIRE(f->mul(a, one()) == a);
      REQUIRE(f->mul(a, zero()) == zero());
      REQUIRE(f->contains(f->mul(a, b)));
      if (!a.is_zero()) REQUIRE(f->mul(a, f->inv(a)) == one());
      // Frobenius
      REQUIRE(f->pow(a + b, 2) == f->pow(a, 2) + f->pow(b, 2));
    }
  }
}

TEST_CASE("Lagrange: a^(2^m - 1) = 1 for every nonzero a") {
  for (const auto& c : kConfigs) {
    auto f = make_field(c.m, c.modulus);
    for (std::uint32_t v = 1; v < f->order(); ++v) REQUIRE(f->pow(Element{v}, f->order() - 1) == one());
  }
}

TEST_CASE("group order factorization") {
  CHECK(make_field(4, 0x13)->group_order_primes() == std::vector<std::uint64_t>{3, 5});
  CHECK(make_field(8, 0x165)->group_order_primes() == std::vector<std::uint64_t>{3, 5, 17});
  CHECK(make_field(2, 0x7)->group_order_primes() == std::vector<std::uint64_t>{3});
}
