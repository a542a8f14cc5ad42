// Copyright 2026 The pairnet Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PAIRNET_TOOLS_CLI_HPP_
#define PAIRNET_TOOLS_CLI_HPP_

#include <ostream>
#include <string>
#include <vector>

namespace pairnet::cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

// Parses `args` (without the program name) and runs one subcommand.
int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

// "N" or "A..B" with even endpoints; A..B yields every even N in between.
std::vector<int> ParsePortsRange(const std::string& text);

}  // namespace pairnet::cli

#endif  // PAIRNET_TOOLS_CLI_HPP_
