// Copyright 2026 The schurkit Authors
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
/**
 * @file
 * The schurkit command line.
 */
#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace schurkit::cli {

enum ExitCode : int {
    kOk = 0,
    kValidation = 1,    ///< bad input values or files
    kBoundViolation = 2, ///< ran to completion but a checked bound or tolerance failed
    kUsage = 64,
};

/// args excludes the program name. Output goes to `out` unless --out is given.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace schurkit::cli
