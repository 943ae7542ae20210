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
 * Symmetric-group characters by the Murnaghan-Nakayama rule.
 *
 * Shares nothing with the Clebsch-Gordan code, so it can serve as an
 * independent oracle.
 */
#pragma once

#include "schurkit/partition.hpp"
#include "schurkit/permutation.hpp"

#include <cstdint>

namespace schurkit {

/// chi_lambda on the conjugacy class with cycle type mu. Memoized.
long long mn_character(const Partition &lambda, const Partition &mu);
long long character(const Partition &lambda, const Perm &s);
/// Number of permutations with cycle type mu.
std::uint64_t class_size(const Partition &mu);

} // namespace schurkit
