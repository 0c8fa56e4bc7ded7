// Copyright 2026 The circuitlp Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CIRCUITLP_TOOLS_CLI_HPP_
#define CIRCUITLP_TOOLS_CLI_HPP_

#include <ostream>
#include <string>
#include <vector>

namespace circuitlp {

inline constexpr int kExitOk = 0;
inline constexpr int kExitNegative = 1;  // infeasible or unbounded
inline constexpr int kExitUsage = 2;
inline constexpr int kExitInternal = 3;

// Runs one command line (without the program name) and returns the exit
// code. All output goes to `out` and `err`.
int cli_dispatch(const std::vector<std::string>& args, std::ostream& out,
                 std::ostream& err);

}  // namespace circuitlp

#endif  // CIRCUITLP_TOOLS_CLI_HPP_
