// Copyright 2026 The cyclopt Authors
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

#ifndef CYCLOPT_CLI_HPP
#define CYCLOPT_CLI_HPP

#include <optional>
#include <string>
#include <vector>

#include "cyclopt/serialize.hpp"

namespace cyclopt {

enum ExitCode : int {
    kExitOk = 0,
    kExitExpectation = 1,  // --expect-optimal not met, or an internal failure
    kExitParams = 2,
    kExitOverlap = 3,
    kExitPrimitivity = 4,
    kExitLimit = 5,
};

struct CliResult {
    int exit_code = kExitOk;
    std::string out;
    std::string err;
};

/// Runs one command line (without the program name) and captures its output.
CliResult run_cli(const std::vector<std::string>& args);

/// Code descriptor shared by `construct` and `verify`: code_json plus d,
/// optimal and theorem_tags. d and optimal are null without a report.
Json describe_code(const CodeSpec& code, const std::optional<DistanceReport>& report);

}  // namespace cyclopt

#endif  // CYCLOPT_CLI_HPP
