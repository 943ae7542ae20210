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
#include "schurkit/characters.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <stdexcept>

namespace schurkit {

namespace {

std::mutex memo_mutex;
std::map<std::pair<Partition, Partition>, long long> memo;

// Beta-set form: removing a rim hook of length k moves one bead from b to b-k.
long long mn_rec(const Partition &lambda, const Partition &mu, std::size_t pos) {
    if (pos == mu.size()) {
        return lambda.empty() ? 1 : 0;
    }
    Partition rest(mu.begin() + static_cast<long>(pos), mu.end());
    {
        std::lock_guard<std::mutex> lock(memo_mutex);
        if (auto it = memo.find({lambda, rest}); it != memo.end()) {
            return it->second;
        }
    }
    const int k = mu[pos];
    const int L = rows(lambda);
    std::vector<int> beta(L);
    for (int i = 0; i < L; ++i) {
        beta[i] = lambda[i] + (L - 1 - i);
    }
    const std::set<int> beads(beta.begin(), beta.end());
    long long total = 0;
    for (int i = 0; i < L; ++i) {
        const int b = beta[i];
        const int nb = b - k;
        if (nb < 0 || beads.count(nb) != 0) {
            continue;
        }
        int between = 0;
        for (int x : beta) {
            if (x > nb && x < b) {
                ++between;
            }
        }
        std::vector<int> nbeta(beta);
        nbeta[i] = nb;
        std::sort(nbeta.begin(), nbeta.end(), std::greater<>());
        Partition next(L);
        for (int j = 0; j < L; ++j) {
            next[j] = nbeta[j] - (L - 1 - j);
        }
        const long long sub = mn_rec(canonical(next), mu, pos + 1);
        total += (between % 2 == 0 ? 1 : -1) * sub;
    }
    std::lock_guard<std::mutex> lock(memo_mutex);
    memo.emplace(std::make_pair(lambda, rest), total);
    return total;
}

} // namespace

long long mn_character(const Partition &lambda, const Partition &mu) {
    const auto lam = canonical(lambda);
    auto m = canonical([&] {
        Partition t(mu);
        std::sort(t.begin(), t.end(), std::greater<>());
        return t;
    }());
    if (box_count(lam) != box_count(m)) {
        throw std::invalid_argument("mn_character: |lambda| != |mu|");
    }
    return mn_rec(lam, m, 0);
}

long long character(const Partition &lambda, const Perm &s) {
    return mn_character(lambda, cycle_type(s));
}

std::uint64_t class_size(const Partition &mu) {
    const int n = box_count(mu);
    std::map<int, int> mult;
    for (int x : mu) {
        ++mult[x];
    }
    std::uint64_t z = 1;
    for (const auto &[len, m] : mult) {
        for (int i = 0; i < m; ++i) {
            z *= static_cast<std::uint64_t>(len);
        }
        z *= factorial(m);
    }
    return factorial(n) / z;
}

} // namespace schurkit
