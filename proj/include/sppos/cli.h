// Copyright 2026 The Authors.
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

#ifndef SPPOS_CLI_H_
#define SPPOS_CLI_H_

#include <iosfwd>
#include <string>
#include <vector>

namespace sppos {

// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalid = 1;    // malformed input or usage
inline constexpr int kExitNegative = 2;   // well-formed, verdict is "no"
inline constexpr int kExitInternal = 3;   // two routes disagreed

// Runs the command line `args` (args[0] is the program name). Input files
// default to `in`; results go to `out`, diagnostics to `err`.
int RunCli(const std::vector<std::string>& args, std::istream& in,
           std::ostream& out, std::ostream& err);

}  // namespace sppos

#endif  // SPPOS_CLI_H_
