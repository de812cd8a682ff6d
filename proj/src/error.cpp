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
#include "gcirc/error.hpp"

namespace gcirc {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::ReducibleModulus: return "REDUCIBLE_MODULUS";
    case Errc::BadDegree: return "BAD_DEGREE";
    case Errc::DivisionByZero: return "DIVISION_BY_ZERO";
    case Errc::ParseError: return "PARSE_ERROR";
    case Errc::OutOfRange: return "OUT_OF_RANGE";
    case Errc::DimMismatch: return "DIM_MISMATCH";
    case Errc::Singular: return "SINGULAR";
    case Errc::BadIndex: return "BAD_INDEX";
    case Errc::NotAKCycle: return "NOT_A_KCYCLE";
    case Errc::NotCoprime: return "NOT_COPRIME";
    case Errc::BadOrder: return "BAD_ORDER";
    case Errc::TooLarge: return "TOO_LARGE";
    case Errc::BadModulus: return "BAD_MODULUS";
    case Errc::SpaceTooLarge: return "SPACE_TOO_LARGE";
    case Errc::BadResumeToken: return "BAD_RESUME_TOKEN";
    case Errc::ConfigError: return "CONFIG_ERROR";
    case Errc::UsageError: return "USAGE_ERROR";
    case Errc::LawViolation: return "LAW_VIOLATION";
  }
  return "UNKNOWN";
}

}  // namespace gcirc
