/* Copyright 2026 The ambec Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 *
 */

#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "ambec/core.hpp"

namespace ambec::cli {

// Process exit codes.
inline constexpr int kOk = 0;
inline constexpr int kNoRoot = 2;
inline constexpr int kInvalidInput = 3;
inline constexpr int kNumericalFailure = 4;

int exit_code(ErrorKind kind) noexcept;

/// Runs one command line (without the program name) and returns the exit
/// code. Diagnostics go to `err`, short summaries to `out`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ambec::cli
