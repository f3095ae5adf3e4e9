// Copyright 2026 The qarrow Authors
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

#ifndef QARROW_CLI_H
#define QARROW_CLI_H

#include <ostream>
#include <string>
#include <vector>

namespace qarrow {

/// Exit codes of the command-line tool.
enum ExitCode : int {
    kExitOk = 0,
    kExitLawFailure = 1,
    /// Usage errors, unreadable files, and circuit parse diagnostics.
    kExitBadInput = 2,
    /// A density failed numerical validation or a demo missed its target.
    kExitNumerical = 3,
};

/// Runs the `qarrow` tool. `args` excludes the program name.
///
///     run <file> [--format text|json] [--precision N] [--validate-input]
///     demo <toffoli|teleport> [--format text|json] [--precision N]
///     laws [--seed S] [--tol T] [--cases N]
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace qarrow

#endif
