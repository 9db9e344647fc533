//
// Copyright 2026 The dppca Authors
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
//

#ifndef DPPCA_TOOLS_CLI_H_
#define DPPCA_TOOLS_CLI_H_

#include <iosfwd>
#include <string>
#include <vector>

namespace dppca::cli {

// Exit statuses.
inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitData = 3;
inline constexpr int kExitRegime = 4;

// Runs one `dppca <command> [flags]` invocation. `args` excludes the program
// name. Reports go to files under --output or to `out`; diagnostics go to
// `err`.
int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err);

}  // namespace dppca::cli

#endif  // DPPCA_TOOLS_CLI_H_
