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

#ifndef ADSELECT_CLI_H_
#define ADSELECT_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace adselect {

// Entry point of the `adselect` tool. Subcommands: solve, simulate,
// oracle-check, split-prob. Returns the process exit code; 0 on success,
// 1 on a runtime failure (bad matrix, infeasible size, budget refusal) and
// a CLI11 usage code otherwise.
int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err);

}  // namespace adselect

#endif  // ADSELECT_CLI_H_
