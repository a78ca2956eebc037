// Copyright 2026 The nmds Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end:
//
//   nmds table  --q 7 [--format text|json|csv]
//   nmds verify --qmin 3 --qmax 13
//   nmds solve  --q 7 --b1 0 --b2 1 --c 0
//   nmds census --q 4
//
// Exit status: 0 when every check passes, 1 on a mathematical mismatch,
// 2 on bad usage or input.

#ifndef NMDS_TOOLS_CLI_HPP
#define NMDS_TOOLS_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace nmds::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitUsage = 2;

/// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nmds::cli

#endif  // NMDS_TOOLS_CLI_HPP
