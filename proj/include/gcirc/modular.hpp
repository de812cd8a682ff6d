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

// Integer-side number theory used by the shift parameters of g-circulant
// matrices: gcd, inverses mod k, and the square roots of unity mod k.

#include <cstdint>
#include <utility>
#include <vector>

namespace gcirc {

std::uint64_t gcd(std::uint64_t a, std::uint64_t b) noexcept;

/// Mathematical modulus, result in [0, k).
inline std::uint64_t mod(std::int64_t a, std::uint64_t k) noexcept {
  auto r = a % static_cast<std::int64_t>(k);
  return static_cast<std::uint64_t>(r < 0 ? r + static_cast<std::int64_t>(k) : r);
}

/// g^{-1} mod k; NOT_COPRIME if gcd(g, k) != 1.
std::uint64_t mod_inverse(std::uint64_t g, std::uint64_t k);

/// {a*g mod k : a = 0..k-1} == {0..k-1}, by orbit enumeration.
bool is_complete_residue_system(std::uint64_t g, std::uint64_t k);

struct PrimePower {
  std::uint64_t prime;
  unsigned exponent;
  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Trial division; k <= 2^32. factorize(1) is empty.
std::vector<PrimePower> factorize(std::uint64_t k);

struct SqrtOneSolutions {
  std::uint64_t k = 0;
  std::vector<std::uint64_t> solutions;  // sorted, in 1..k-1
  std::uint64_t predicted_count = 0;
};

inline constexpr std::uint64_t kSqrtScanLimit = std::uint64_t{1} << 20;
inline constexpr std::uint64_t kModulusLimit = std::uint64_t{1} << 32;

/// Count of x^2 = 1 (mod k) from the factorization k = 2^m * prod p_i^{m_i}:
/// 2^l for m <= 1, 2^{l+1} for m = 2, 2^{l+2} for m >= 3, l = number of odd primes.
std::uint64_t sqrt_one_count_law(std::uint64_t k);

/// Solutions by direct scan for k <= 2^20, CRT reconstruction above that
/// (up to 2^32). Throws BAD_MODULUS for k < 2 or k > 2^32, and
/// LAW_VIOLATION if the solution set disagrees with the count law.
SqrtOneSolutions sqrt_one_solutions(std::uint64_t k);

std::vector<std::uint64_t> sqrt_one_scan(std::uint64_t k);
std::vector<std::uint64_t> sqrt_one_crt(std::uint64_t k);

}  // namespace gcirc
