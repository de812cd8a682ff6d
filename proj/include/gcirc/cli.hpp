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

#include <atomic>
#include <iosfwd>
#include <string>
#include <vector>

#include "gcirc/error.hpp"

namespace gcirc::cli {

enum ExitCode : int {
  kOk = 0,
  kCheckFailed = 1,
  kUsage = 2,
  kResource = 3,
};

int exit_code_for(Errc code) noexcept;

/// Runs one command line (args[0] is the program name). Results go to `out`,
/// diagnostics to `err`. `stop` interrupts a running search.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const std::atomic<bool>* stop = nullptr);

}  // namespace gcirc::cli
