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

// Reference constructions with known values, and a runner that checks
// every stated fact about them exactly.
//
//   ex-3circ-5x5      3-circulant, k = 5, GF(2^8) / 1+x^2+x^5+x^6+x^8: A^2 is 4-circulant, A^2[0,0] = a^6+1
//   ex-leftcirc-5x5   left-circulant with the same row: involutory and MDS
//   ex-semiortho-5x5  circulant over GF(2^8) / x^8+x^4+x^3+x^2+1: semi-orthogonal with given D1, D2
//   ex-semiinv-2x2    circulant(1, a^2) over GF(4): semi-involutory, D1 = diag(a,a), D2 = I
//   ex-semiinv-4x4    circulant(a, a^3, a^2+a+1, a^3) over GF(16): D1 = (a^3+1) I, D2 = I

#include <string>
#include <string_view>
#include <vector>

#include "gcirc/circulant.hpp"
#include "gcirc/properties.hpp"

namespace gcirc::repro {

/// The first row (1, a, 1+a+a^4+a^5+a^7, 1+a+a^3+a^4+a^5+a^7, a+a^3) over GF(2^8) / 0x165.
GCirculantSpec three_circulant_5x5();
GCirculantSpec left_circulant_5x5();
GCirculantSpec semi_orthogonal_5x5();
GCirculantSpec semi_involutory_2x2();
GCirculantSpec semi_involutory_4x4();

/// The reference witnesses, in their original scaling.
DiagonalPair semi_orthogonal_5x5_pair();
DiagonalPair semi_involutory_2x2_pair();
DiagonalPair semi_involutory_4x4_pair();

struct Fact {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct Report {
  std::string id;
  std::string title;
  std::vector<Fact> facts;

  bool passed() const noexcept;
};

const std::vector<std::string_view>& example_ids();

/// USAGE_ERROR for an unknown id.
Report run(std::string_view id);

/// Detects the pair with `detect` and rescales it so d2[0] matches `stated.d2[0]`.
DiagonalPair detect_in_stated_scaling(const Matrix& a, const DiagonalPair& stated, bool orthogonal);

}  // namespace gcirc::repro
