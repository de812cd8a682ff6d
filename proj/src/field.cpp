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
#include "gcirc/field.hpp"

#include <bit>
#include <cctype>
#include <cstdio>
#include <string>

#include "gcirc/error.hpp"
#include "gcirc/modular.hpp"

namespace gcirc {

namespace {

int poly_degree(std::uint32_t p) noexcept { return p == 0 ? -1 : 31 - std::countl_zero(p); }

std::string hex(std::uint32_t v) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "0x%X", v);
  return buf;
}

}  // namespace

std::uint32_t poly_mod(std::uint32_t a, std::uint32_t b) noexcept {
  const int db = poly_degree(b);
  for (int da = poly_degree(a); da >= db; da = poly_degree(a)) a ^= b << (da - db);
  return a;
}

bool is_irreducible(unsigned m, std::uint32_t poly) noexcept {
  if (poly_degree(poly) != static_cast<int>(m)) return false;
  if (m == 1) return true;
  // Any factorization has a factor of degree <= m/2.
  const std::uint32_t limit = 1u << (m / 2 + 1);
  for (std::uint32_t d = 2; d < limit; ++d) {
    if (poly_mod(poly, d) == 0) return false;
  }
  return true;
}

Field::Field(unsigned m, std::uint32_t modulus, MulMethod method)
    : m_(m), modulus_(modulus), method_(method) {
  if (m < 1 || m > kMaxDegree) {
    throw Error(Errc::BadDegree, "extension degree must be in 1..16, got " + std::to_string(m));
  }
  if (poly_degree(modulus) != static_cast<int>(m)) {
    throw Error(Errc::BadDegree, "modulus " + hex(modulus) + " does not have degree " + std::to_string(m));
  }
  if ((modulus & 1u) == 0 || !is_irreducible(m, modulus)) {
    throw Error(Errc::ReducibleModulus, "modulus " + hex(modulus) + " is reducible over GF(2)");
  }
  for (const auto& pp : factorize(order() - 1)) order_primes_.push_back(pp.prime);

  if (method_ == MulMethod::LogTable) {
    if (m > 8) throw Error(Errc::BadDegree, "log tables are only built for m <= 8");
    // Tables need a generator; the polynomial x is not primitive for every modulus.
    Element gen = one();
    for (std::uint32_t c = 2; c < order(); ++c) {
      if (is_primitive(Element{c})) {
        gen = Element{c};
        break;
      }
    }
    const std::uint32_t n = order() - 1;
    exp_.assign(2 * n, 0);
    log_.assign(order(), 0);
    Element x = one();
    for (std::uint32_t i = 0; i < n; ++i) {
      exp_[i] = exp_[i + n] = static_cast<std::uint16_t>(x.bits);
      log_[x.bits] = static_cast<std::uint16_t>(i);
      x = mul_shift_reduce(x, gen);
    }
    if (n == 1) {  // GF(2): the only nonzero element is 1
      exp_[0] = exp_[1] = 1;
    }
  }
}

Element Field::mul_shift_reduce(Element a, Element b) const noexcept {
  std::uint32_t x = a.bits, y = b.bits, r = 0;
  const std::uint32_t top = 1u << m_;
  while (y) {
    if (y & 1u) r ^= x;
    y >>= 1;
    x <<= 1;
    if (x & top) x ^= modulus_;
  }
  return Element{r};
}

Element Field::mul(Element a, Element b) const noexcept {
  // exp_ is empty while the constructor is still searching for a generator.
  if (method_ == MulMethod::LogTable && !exp_.empty()) {
    if (a.is_zero() || b.is_zero()) return zero();
    return Element{exp_[log_[a.bits] + log_[b.bits]]};
  }
  return mul_shift_reduce(a, b);
}

Element Field::pow(Element a, std::uint64_t e) const noexcept {
  Element result = one();
  while (e) {
    if (e & 1u) result = mul(result, a);
    a = mul(a, a);
    e >>= 1;
  }
  return result;
}

Element Field::inv(Element a) const {
  if (a.is_zero()) throw Error(Errc::DivisionByZero, "inverse of zero");
  return pow(a, order() - 2);
}

bool Field::is_primitive(Element a) const {
  if (a.is_zero()) return false;
  const std::uint64_t n = order() - 1;
  if (pow(a, n) != one()) return false;
  for (auto p : order_primes_) {
    if (pow(a, n / p) == one()) return false;
  }
  return true;
}

Element Field::parse(std::string_view text) const {
  auto fail = [&](std::size_t pos, const std::string& why) -> Error {
    return Error(Errc::ParseError, why + " at position " + std::to_string(pos) + " in \"" +
                                       std::string(text) + "\"");
  };
  auto check_range = [&](std::uint64_t bits, std::size_t pos) {
    if (bits >= order()) {
      throw Error(Errc::OutOfRange, "\"" + std::string(text) + "\" at position " +
                                        std::to_string(pos) + " exceeds GF(2^" + std::to_string(m_) + ")");
    }
  };

  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  if (i == text.size()) throw fail(i, "empty element literal");

  if (text.size() - i > 2 && text[i] == '0' && (text[i + 1] == 'x' || text[i + 1] == 'X')) {
    const std::size_t start = i;
    i += 2;
    std::uint64_t v = 0;
    std::size_t digits = 0;
    for (; i < text.size() && std::isxdigit(static_cast<unsigned char>(text[i])); ++i, ++digits) {
      if (digits >= 8) throw Error(Errc::OutOfRange, "hex literal too long: \"" + std::string(text) + "\"");
      const char c = static_cast<char>(std::tolower(static_cast<unsigned char>(text[i])));
      v = v * 16 + static_cast<std::uint64_t>(c <= '9' ? c - '0' : c - 'a' + 10);
    }
    if (digits == 0) throw fail(i, "expected hex digits");
    skip_ws();
    if (i != text.size()) throw fail(i, "unexpected character");
    check_range(v, start);
    return Element{static_cast<std::uint32_t>(v)};
  }

  // term ('+' term)*, term := '0' | '1' | var | var '^' digits
  std::uint32_t acc = 0;
  while (true) {
    skip_ws();
    if (i == text.size()) throw fail(i, "expected term");
    const std::size_t term_pos = i;
    const char c = text[i];
    std::uint64_t degree = 0;
    bool is_zero_term = false;
    if (c == '0' || c == '1') {
      is_zero_term = c == '0';
      ++i;
    } else if (c == 'a' || c == 'x') {
      ++i;
      degree = 1;
      skip_ws();
      if (i < text.size() && text[i] == '^') {
        ++i;
        skip_ws();
        if (i == text.size() || !std::isdigit(static_cast<unsigned char>(text[i]))) {
          throw fail(i, "expected exponent");
        }
        degree = 0;
        for (; i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])); ++i) {
          degree = degree * 10 + static_cast<std::uint64_t>(text[i] - '0');
          if (degree > 1000) break;
        }
      }
    } else {
      throw fail(i, std::string("unexpected character '") + c + "'");
    }
    if (!is_zero_term) {
      if (degree >= m_) {
        throw Error(Errc::OutOfRange, "term of degree " + std::to_string(degree) + " at position " +
                                          std::to_string(term_pos) + " in \"" + std::string(text) +
                                          "\" exceeds GF(2^" + std::to_string(m_) + ")");
      }
      acc ^= 1u << degree;
    }
    skip_ws();
    if (i == text.size()) break;
    if (text[i] != '+') throw fail(i, std::string("unexpected character '") + text[i] + "'");
    ++i;
  }
  return Element{acc};
}

std::string Field::format_hex(Element a) const {
  const int width = m_ <= 8 ? 2 : 4;
  char buf[16];
  std::snprintf(buf, sizeof buf, "0x%0*x", width, a.bits);
  return buf;
}

std::string Field::format_poly(Element a) const {
  if (a.is_zero()) return "0";
  std::string out;
  for (int d = static_cast<int>(m_) - 1; d >= 0; --d) {
    if (!(a.bits >> d & 1u)) continue;
    if (!out.empty()) out += '+';
    if (d == 0)
      out += '1';
    else if (d == 1)
      out += 'a';
    else
      out += "a^" + std::to_string(d);
  }
  return out;
}

}  // namespace gcirc
