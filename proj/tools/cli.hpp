// Copyright 2026 The critcausal Authors
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

#ifndef CRITCAUSAL__TOOLS__CLI_HPP_
#define CRITCAUSAL__TOOLS__CLI_HPP_

#include <ostream>
#include <string>
#include <vector>

namespace critcausal::cli
{

/// Exit codes: 0 clean, 1 domain finding (violations, failed checks,
/// model errors), 2 usage or I/O error.
enum ExitCode : int { kClean = 0, kFinding = 1, kUsage = 2 };

/// Runs one invocation; `args` excludes the program name.
int run(const std::vector<std::string> & args, std::ostream & out, std::ostream & err);

}  // namespace critcausal::cli

#endif  // CRITCAUSAL__TOOLS__CLI_HPP_
