/*
 * Copyright 2026 The fbsim Authors
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
 */

#ifndef FBSIM_CLI_HPP
#define FBSIM_CLI_HPP

#include <ostream>

namespace fbsim::cli {

/// Exit statuses of the command-line front end.
inline constexpr int kExitSuccess = 0;
inline constexpr int kExitContractViolation = 1;
inline constexpr int kExitValidation = 2;

/**
 * Parses argv, validates every flag combination, runs the subcommand and
 * writes its artifact to --output (or `out`). Diagnostics go to `err`.
 * Returns 0 on success, 2 on validation / cap / file errors, 1 when a
 * numerical contract is violated (the deviation is printed).
 */
int dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace fbsim::cli

#endif  // FBSIM_CLI_HPP
