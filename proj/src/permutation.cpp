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
#include "schurkit/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace schurkit {

Perm identity_perm(int n) {
    Perm s(n);
    std::iota(s.begin(), s.end(), 0);
    return s;
}

bool is_perm(const Perm &s) {
    std::vector<bool> seen(s.size(), false);
    for (int x : s) {
        if (x < 0 || x >= static_cast<int>(s.size()) || seen[x]) {
            return false;
        }
        seen[x] = true;
    }
    return true;
}

Perm compose(const Perm &s, const Perm &t) {
    if (s.size() != t.size()) {
        throw std::invalid_argument("compose: size mismatch");
    }
    Perm out(s.size());
    for (std::size_t k = 0; k < s.size(); ++k) {
        out[k] = s[t[k]];
    }
    return out;
}

Perm inverse(const Perm &s) {
    Perm out(s.size());
    for (std::size_t k = 0; k < s.size(); ++k) {
        out[s[k]] = static_cast<int>(k);
    }
    return out;
}

Partition cycle_type(const Perm &s) {
    std::vector<bool> seen(s.size(), false);
    Partition out;
    for (std::size_t k = 0; k < s.size(); ++k) {
        if (seen[k]) {
            continue;
        }
        int len = 0;
        for (std::size_t j = k; !seen[j]; j = s[j]) {
            seen[j] = true;
            ++len;
        }
        out.push_back(len);
    }
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

int perm_sign(const Perm &s) {
    int parity = 0;
    for (int len : cycle_type(s)) {
        parity += len - 1;
    }
    return parity % 2 == 0 ? 1 : -1;
}

Perm transposition(int n, int a, int b) {
    Perm s = identity_perm(n);
    std::swap(s.at(a), s.at(b));
    return s;
}

std::vector<Perm> all_perms(int n) {
    std::vector<Perm> out;
    Perm s = identity_perm(n);
    do {
        out.push_back(s);
    } while (std::next_permutation(s.begin(), s.end()));
    return out;
}

std::uint64_t factorial(int n) {
    if (n < 0 || n > 20) {
        throw std::out_of_range("factorial: n outside [0, 20]");
    }
    std::uint64_t f = 1;
    for (int k = 2; k <= n; ++k) {
        f *= static_cast<std::uint64_t>(k);
    }
    return f;
}

std::size_t perm_rank(const Perm &s) {
    const int n = static_cast<int>(s.size());
    std::size_t rank = 0;
    for (int i = 0; i < n; ++i) {
        int smaller = 0;
        for (int j = i + 1; j < n; ++j) {
            if (s[j] < s[i]) {
                ++smaller;
            }
        }
        rank += static_cast<std::size_t>(smaller) * factorial(n - 1 - i);
    }
    return rank;
}

Perm random_perm(int n, std::mt19937_64 &rng) {
    Perm s = identity_perm(n);
    for (int i = n - 1; i > 0; --i) {
        std::uniform_int_distribution<int> pick(0, i);
        std::swap(s[i], s[pick(rng)]);
    }
    return s;
}

std::string perm_to_string(const Perm &s) {
    std::string out;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i > 0) {
            out += ',';
        }
        out += std::to_string(s[i] + 1);
    }
    return out;
}

Perm parse_perm(const std::string &text) {
    Perm s;
    for (int x : parse_weight(text)) {
        s.push_back(x - 1);
    }
    if (!is_perm(s)) {
        throw std::invalid_argument("not a permutation: " + text);
    }
    return s;
}

} // namespace schurkit
