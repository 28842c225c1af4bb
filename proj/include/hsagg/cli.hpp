/*
 * Copyright 2026 The hsagg Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef HSAGG_CLI_HPP_
#define HSAGG_CLI_HPP_

#include <ostream>
#include <string>
#include <vector>

namespace hsagg::cli {

// Exit codes are a stable contract for scripts.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;  // verification, correctness, infeasible
inline constexpr int kExitUsage = 2;   // bad flags, unreadable or malformed input

// Runs one subcommand: rates, build, example, verify or simulate. `args`
// excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace hsagg::cli

#endif  // HSAGG_CLI_HPP_
