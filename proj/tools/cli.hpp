// Copyright 2026 The cnotsim Authors
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

#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace cnotsim::cli {

/// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kFailure = 1;       // usage, validation, I/O
inline constexpr int kIsingLimit = 2;    // eta == 0 coupling
inline constexpr int kInfeasible = 3;    // gate time or grid infeasible
inline constexpr int kCheckFailed = 4;   // verify-identity mismatch

/// Runs one command. args[0] is the program name. Results go to `out`;
/// errors are a single line `error code=<name> exit=<n>: <message>` on `err`.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace cnotsim::cli
