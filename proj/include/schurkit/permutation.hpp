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
 * Permutations of {0, ..., n-1} in one-line notation: s[m] = s(m).
 *
 * Composition is (s t)(k) = s(t(k)). Enumeration is lexicographic in
 * one-line notation.
 */
#pragma once

#include "schurkit/partition.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace schurkit {

using Perm = std::vector<int>;

Perm identity_perm(int n);
bool is_perm(const Perm &s);
Perm compose(const Perm &s, const Perm &t);
Perm inverse(const Perm &s);
int perm_sign(const Perm &s);
/// Cycle lengths sorted descending, as a partition of n.
Partition cycle_type(const Perm &s);
/// Transposition of positions a and b (0-based).
Perm transposition(int n, int a, int b);

/// All n! permutations in lexicographic one-line order.
std::vector<Perm> all_perms(int n);
/// Position of s in all_perms(n).
std::size_t perm_rank(const Perm &s);
Perm random_perm(int n, std::mt19937_64 &rng);
std::uint64_t factorial(int n);

/// 1-based one-line notation, e.g. "2,3,1".
std::string perm_to_string(const Perm &s);
Perm parse_perm(const std::string &text);

} // namespace schurkit
