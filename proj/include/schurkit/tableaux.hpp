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
 * Gel'fand-Zetlin patterns (basis of the U(d) irrep) and Young-Yamanouchi
 * paths (basis of the S_n irrep).
 */
#pragma once

#include "schurkit/partition.hpp"

#include <map>
#include <string>
#include <vector>

namespace schurkit {

/// chain[j-1] = q_j has at most j rows; q_{j-1} interlaces q_j; chain.back() = lambda.
struct GZPattern {
    std::vector<Partition> chain;
    int d() const { return static_cast<int>(chain.size()); }
    const Partition &top() const { return chain.back(); }
    auto operator<=>(const GZPattern &) const = default;
};

/// chain[k-1] = p_k has k boxes; p_1 = (1); chain.back() = lambda.
struct YYPath {
    std::vector<Partition> chain;
    int n() const { return static_cast<int>(chain.size()); }
    const Partition &top() const { return chain.back(); }
    auto operator<=>(const YYPath &) const = default;
};

/// entry_j = |q_j| - |q_{j-1}|.
Weight weight(const GZPattern &q);
bool is_valid(const GZPattern &q);
bool is_valid(const YYPath &p);

/**
 * All GZ patterns of shape lambda for U(d). Ordered by q_{d-1} in partition
 * order, then recursively by q_{d-2}, and so on. For d=2, lambda=(2) the
 * weights come out as (2,0), (1,1), (0,2).
 */
std::vector<GZPattern> enumerate_gz(const Partition &lambda, int d);

/**
 * All YY paths of shape lambda, in yy_index order: ordered by p_{n-1} in
 * partition order, then by p_{n-2}, and so on. The empty shape has one
 * path with an empty chain.
 */
std::vector<YYPath> enumerate_yy(const Partition &lambda);

/**
 * 1-based rank of p: 1 + sum_k sum_{mu in p_k - box, mu before p_{k-1}} dim_p(mu).
 */
int yy_index(const YYPath &p);
YYPath yy_unindex(const Partition &lambda, int k);

/// Pattern of the defining irrep (lambda=(1)) for basis vector i in [1, d].
GZPattern defining_pattern(int i, int d);

/// Lookup table from patterns to their position in enumerate_gz order.
class GZTable {
  public:
    GZTable(const Partition &lambda, int d);
    const Partition &lambda() const { return lambda_; }
    int d() const { return d_; }
    int size() const { return static_cast<int>(patterns_.size()); }
    const GZPattern &at(int idx) const { return patterns_.at(idx); }
    const std::vector<GZPattern> &patterns() const { return patterns_; }
    /// -1 if absent.
    int index_of(const GZPattern &q) const;

  private:
    Partition lambda_;
    int d_;
    std::vector<GZPattern> patterns_;
    std::map<std::vector<Partition>, int> index_;
};

/// Semicolon-joined partitions in chain order, e.g. "1;1,1;2,1".
std::string to_string(const GZPattern &q);
std::string to_string(const YYPath &p);
GZPattern parse_gz(const std::string &s);
YYPath parse_yy(const std::string &s);

} // namespace schurkit
