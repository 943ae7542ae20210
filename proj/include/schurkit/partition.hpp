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
 * Partitions and weights.
 *
 * A partition is stored in canonical form: weakly decreasing, positive
 * parts only. The number of rows d is supplied by callers where needed.
 */
#pragma once

#include <string>
#include <vector>

namespace schurkit {

using Partition = std::vector<int>;
using Weight = std::vector<int>;

/// Drop trailing zeros. Throws if the input is not weakly decreasing or has negative parts.
Partition canonical(std::vector<int> parts);
bool is_partition(const std::vector<int> &parts);

int box_count(const std::vector<int> &parts);
inline int rows(const Partition &p) { return static_cast<int>(p.size()); }

/// p padded with zeros to length d (d >= rows(p)).
std::vector<int> padded(const Partition &p, int d);

/**
 * Total order used everywhere: lexicographic descending on the padded
 * parts, so (2) precedes (1,1). Returns true if a comes strictly before b.
 */
bool partition_before(const Partition &a, const Partition &b);

/// All partitions of n with at most d rows, in partition_before order.
std::vector<Partition> enumerate_partitions(int d, int n);

/// Partitions obtained by adding one box (at most d rows), ordered by row.
std::vector<Partition> add_box(const Partition &lambda, int d);
/// Partitions obtained by removing one box, ordered by row.
std::vector<Partition> remove_box(const Partition &lambda);

/// mu interlaces lambda: lambda_1 >= mu_1 >= lambda_2 >= mu_2 >= ...
bool interlaces(const Partition &mu, const Partition &lambda);

Partition conjugate(const Partition &lambda);

/// Dominance order: mu is majorized by lambda (mu need not be sorted).
bool majorized(const Weight &mu, const Partition &lambda);

/// All weights (compositions) of n into d nonnegative parts, lexicographic descending.
std::vector<Weight> enumerate_weights(int d, int n);

/// "4,3,1,1"; the empty partition is "0".
std::string to_string(const Partition &p);
/// Parses comma-joined integers; trailing zeros are dropped.
Partition parse_partition(const std::string &s);
/// Comma-joined, zeros kept.
std::string weight_to_string(const Weight &w);
Weight parse_weight(const std::string &s);

} // namespace schurkit
