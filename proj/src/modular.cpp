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
#include "gcirc/modular.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "gcirc/error.hpp"

namespace gcirc {

__extension__ using i128 = __int128;
__extension__ using u128 = unsigned __int128;

std::uint64_t gcd(std::uint64_t a, std::uint64_t b) noexcept { return std::gcd(a, b); }

std::uint64_t mod_inverse(std::uint64_t g, std::uint64_t k) {
  if (k == 0 || gcd(g % k, k) != 1) {
    throw Error(Errc::NotCoprime, "gcd(" + std::to_string(g) + ", " + std::to_string(k) + ") != 1");
  }
  if (k == 1) return 0;
  // Extended Euclid on signed 128-bit to stay clear of overflow for k up to 2^63.
  i128 r0 = static_cast<i128>(k), r1 = static_cast<i128>(g % k);
  i128 t0 = 0, t1 = 1;
  while (r1 != 0) {
    i128 q = r0 / r1;
    std::swap(r0, r1);
    r1 -= q * r0;
    std::swap(t0, t1);
    t1 -= q * t0;
  }
  if (t0 < 0) t0 += static_cast<i128>(k);
  return static_cast<std::uint64_t>(t0);
}

bool is_complete_residue_system(std::uint64_t g, std::uint64_t k) {
  if (k == 0) return false;
  std::vector<bool> hit(k, false);
  for (std::uint64_t a = 0; a < k; ++a) {
    auto r = static_cast<std::uint64_t>((static_cast<u128>(a) * g) % k);
    if (hit[r]) return false;
    hit[r] = true;
  }
  return true;
}

std::vector<PrimePower> factorize(std::uint64_t k) {
  if (k > kModulusLimit) throw Error(Errc::BadModulus, "factorize limited to k <= 2^32");
  std::vector<PrimePower> out;
  for (std::uint64_t p = 2; p * p <= k; p += (p == 2 ? 1 : 2)) {
    unsigned e = 0;
    while (k % p == 0) {
      k /= p;
      ++e;
    }
    if (e) out.push_back({p, e});
  }
  if (k > 1) out.push_back({k, 1});
  return out;
}

std::uint64_t sqrt_one_count_law(std::uint64_t k) {
  unsigned two_exp = 0;
  unsigned odd_primes = 0;
  for (const auto& pp : factorize(k)) {
    if (pp.prime == 2)
      two_exp = pp.exponent;
    else
      ++odd_primes;
  }
  unsigned extra = two_exp <= 1 ? 0 : (two_exp == 2 ? 1 : 2);
  return std::uint64_t{1} << (odd_primes + extra);
}

std::vector<std::uint64_t> sqrt_one_scan(std::uint64_t k) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t x = 1; x < k; ++x) {
    if ((x * x) % k == 1 % k) out.push_back(x);
  }
  return out;
}

namespace {

// Square roots of 1 modulo a single prime power.
std::vector<std::uint64_t> local_roots(const PrimePower& pp) {
  std::uint64_t q = 1;
  for (unsigned i = 0; i < pp.exponent; ++i) q *= pp.prime;
  if (pp.prime != 2) return {1, q - 1};
  if (pp.exponent == 1) return {1};
  if (pp.exponent == 2) return {1, 3};
  return {1, q / 2 - 1, q / 2 + 1, q - 1};
}

}  // namespace

std::vector<std::uint64_t> sqrt_one_crt(std::uint64_t k) {
  std::vector<std::uint64_t> acc{0};
  std::uint64_t modulus = 1;
  for (const auto& pp : factorize(k)) {
    std::uint64_t q = 1;
    for (unsigned i = 0; i < pp.exponent; ++i) q *= pp.prime;
    const auto roots = local_roots(pp);
    // x = a (mod modulus), x = r (mod q)  =>  x = a + modulus * ((r - a) * modulus^{-1} mod q)
    const std::uint64_t inv = q == 1 ? 0 : mod_inverse(modulus % q, q);
    std::vector<std::uint64_t> next;
    next.reserve(acc.size() * roots.size());
    for (auto a : acc) {
      for (auto r : roots) {
        auto diff = mod(static_cast<std::int64_t>(r) - static_cast<std::int64_t>(a % q), q);
        auto t = static_cast<std::uint64_t>((static_cast<u128>(diff) * inv) % q);
        next.push_back(a + modulus * t);
      }
    }
    acc = std::move(next);
    modulus *= q;
  }
  std::sort(acc.begin(), acc.end());
  acc.erase(std::remove(acc.begin(), acc.end(), 0u), acc.end());
  return acc;
}

SqrtOneSolutions sqrt_one_solutions(std::uint64_t k) {
  if (k < 2 || k > kModulusLimit) {
    throw Error(Errc::BadModulus, "k must satisfy 2 <= k <= 2^32, got " + std::to_string(k));
  }
  SqrtOneSolutions out;
  out.k = k;
  out.solutions = k <= kSqrtScanLimit ? sqrt_one_scan(k) : sqrt_one_crt(k);
  out.predicted_count = sqrt_one_count_law(k);
  if (out.solutions.size() != out.predicted_count) {
    throw Error(Errc::LawViolation, "solution count " + std::to_string(out.solutions.size()) +
                                        " != predicted " + std::to_string(out.predicted_count) +
                                        " for k = " + std::to_string(k));
  }
  return out;
}

}  // namespace gcirc
