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
 * @file field.hpp
 * @brief Binary extension fields GF(2^m), 1 <= m <= 16, with a runtime modulus.
 *
 * Elements are little-endian coefficient masks: bit i holds the coefficient
 * of x^i. Addition is xor and needs no field; everything else goes through a
 * Field, which is immutable once built and safe to share between threads.
 *
 * @code{.cpp}
 * auto f = gcirc::make_field(8, 0x165);   // 1 + x^2 + x^5 + x^6 + x^8
 * auto a = gcirc::Element{0x02};
 * auto b = f->parse("1+a+a^4+a^5+a^7");   // 0xB3
 * auto c = f->mul(a, b) + gcirc::one();
 * @endcode
 */

#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace gcirc {

/// A residue polynomial over GF(2); meaningful only relative to a Field.
struct Element {
  std::uint32_t bits = 0;

  constexpr bool is_zero() const noexcept { return bits == 0; }
  friend constexpr auto operator<=>(Element, Element) = default;
};

constexpr Element zero() noexcept { return Element{0}; }
constexpr Element one() noexcept { return Element{1}; }

// Characteristic 2: addition and subtraction are both xor.
constexpr Element operator+(Element a, Element b) noexcept { return Element{a.bits ^ b.bits}; }
constexpr Element operator-(Element a, Element b) noexcept { return a + b; }
constexpr Element& operator+=(Element& a, Element b) noexcept {
  a.bits ^= b.bits;
  return a;
}

enum class MulMethod {
  ShiftReduce,  ///< schoolbook shift-and-reduce
  LogTable,     ///< log/antilog tables, m <= 8 only
};

inline constexpr unsigned kMaxDegree = 16;

class Field {
 public:
  /// Throws BAD_DEGREE when m is out of range or the modulus does not have
  /// degree m with a nonzero constant term, REDUCIBLE_MODULUS when trial
  /// division finds a factor.
  Field(unsigned m, std::uint32_t modulus, MulMethod method = MulMethod::ShiftReduce);

  unsigned degree() const noexcept { return m_; }
  std::uint32_t modulus() const noexcept { return modulus_; }
  std::uint32_t order() const noexcept { return 1u << m_; }
  MulMethod method() const noexcept { return method_; }

  bool contains(Element a) const noexcept { return a.bits < order(); }

  Element add(Element a, Element b) const noexcept { return a + b; }
  Element mul(Element a, Element b) const noexcept;
  Element pow(Element a, std::uint64_t e) const noexcept;
  /// Throws DIVISION_BY_ZERO for a = 0.
  Element inv(Element a) const;
  Element div(Element a, Element b) const { return mul(a, inv(b)); }

  bool is_primitive(Element a) const;
  /// Distinct primes dividing 2^m - 1, cached at construction.
  const std::vector<std::uint64_t>& group_order_primes() const noexcept { return order_primes_; }

  /// Accepts "0x65" style hex or polynomial syntax "1+a^2+a^5" ('x' also
  /// accepted as the variable). Terms of degree >= m are OUT_OF_RANGE.
  Element parse(std::string_view text) const;
  /// Zero-padded hex, e.g. "0x0b" for m = 8.
  std::string format_hex(Element a) const;
  /// Descending powers, e.g. "a^6+1"; zero is "0".
  std::string format_poly(Element a) const;

  friend bool operator==(const Field& x, const Field& y) noexcept {
    return x.m_ == y.m_ && x.modulus_ == y.modulus_;
  }

 private:
  Element mul_shift_reduce(Element a, Element b) const noexcept;

  unsigned m_;
  std::uint32_t modulus_;
  MulMethod method_;
  std::vector<std::uint64_t> order_primes_;
  std::vector<std::uint16_t> log_;
  std::vector<std::uint16_t> exp_;
};

using FieldPtr = std::shared_ptr<const Field>;

inline FieldPtr make_field(unsigned m, std::uint32_t modulus,
                           MulMethod method = MulMethod::ShiftReduce) {
  return std::make_shared<const Field>(m, modulus, method);
}

/// True iff the degree-m polynomial `poly` has no factor of degree 1..m/2.
bool is_irreducible(unsigned m, std::uint32_t poly) noexcept;

/// Carry-less polynomial remainder over GF(2).
std::uint32_t poly_mod(std::uint32_t a, std::uint32_t b) noexcept;

}  // namespace gcirc
