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
#include "schurkit/partition.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace schurkit {

bool is_partition(const std::vector<int> &parts) {
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] < 0) {
            return false;
        }
        if (i > 0 && parts[i] > parts[i - 1]) {
            return false;
        }
    }
    return true;
}

Partition canonical(std::vector<int> parts) {
    if (!is_partition(parts)) {
        throw std::invalid_argument("not a partition: " + weight_to_string(parts));
    }
    while (!parts.empty() && parts.back() == 0) {
        parts.pop_back();
    }
    return parts;
}

int box_count(const std::vector<int> &parts) {
    int s = 0;
    for (int x : parts) {
        s += x;
    }
    return s;
}

std::vector<int> padded(const Partition &p, int d) {
    if (rows(p) > d) {
        throw std::invalid_argument("partition " + to_string(p) + " has more than " +
                                    std::to_string(d) + " rows");
    }
    std::vector<int> out(p);
    out.resize(d, 0);
    return out;
}

bool partition_before(const Partition &a, const Partition &b) {
    const std::size_t L = std::max(a.size(), b.size());
    for (std::size_t i = 0; i < L; ++i) {
        const int x = i < a.size() ? a[i] : 0;
        const int y = i < b.size() ? b[i] : 0;
        if (x != y) {
            return x > y;
        }
    }
    return false;
}

namespace {

void partitions_rec(int remaining, int max_part, int rows_left, Partition &cur,
                    std::vector<Partition> &out) {
    if (remaining == 0) {
        out.push_back(cur);
        return;
    }
    if (rows_left == 0) {
        return;
    }
    for (int x = std::min(remaining, max_part); x >= 1; --x) {
        cur.push_back(x);
        partitions_rec(remaining - x, x, rows_left - 1, cur, out);
        cur.pop_back();
    }
}

void weights_rec(int remaining, int slots, Weight &cur, std::vector<Weight> &out) {
    if (slots == 1) {
        cur.push_back(remaining);
        out.push_back(cur);
        cur.pop_back();
        return;
    }
    for (int x = remaining; x >= 0; --x) {
        cur.push_back(x);
        weights_rec(remaining - x, slots - 1, cur, out);
        cur.pop_back();
    }
}

} // namespace

std::vector<Partition> enumerate_partitions(int d, int n) {
    if (d < 1 || n < 0) {
        throw std::invalid_argument("enumerate_partitions needs d >= 1 and n >= 0");
    }
    std::vector<Partition> out;
    Partition cur;
    partitions_rec(n, n, d, cur, out);
    return out;
}

std::vector<Weight> enumerate_weights(int d, int n) {
    if (d < 1 || n < 0) {
        throw std::invalid_argument("enumerate_weights needs d >= 1 and n >= 0");
    }
    std::vector<Weight> out;
    Weight cur;
    weights_rec(n, d, cur, out);
    return out;
}

std::vector<Partition> add_box(const Partition &lambda, int d) {
    std::vector<Partition> out;
    const int r = rows(lambda);
    for (int i = 0; i < std::min(r + 1, d); ++i) {
        const int cur = i < r ? lambda[i] : 0;
        if (i == 0 || lambda[i - 1] > cur) {
            Partition p(lambda);
            if (i == r) {
                p.push_back(1);
            } else {
                ++p[i];
            }
            out.push_back(std::move(p));
        }
    }
    return out;
}

std::vector<Partition> remove_box(const Partition &lambda) {
    std::vector<Partition> out;
    const int r = rows(lambda);
    for (int i = 0; i < r; ++i) {
        const int next = i + 1 < r ? lambda[i + 1] : 0;
        if (lambda[i] > next) {
            Partition p(lambda);
            --p[i];
            out.push_back(canonical(std::move(p)));
        }
    }
    return out;
}

bool interlaces(const Partition &mu, const Partition &lambda) {
    const int L = std::max(rows(lambda), rows(mu) + 1);
    const auto at = [](const Partition &p, int i) { return i < rows(p) ? p[i] : 0; };
    for (int i = 0; i + 1 < L; ++i) {
        if (!(at(lambda, i) >= at(mu, i) && at(mu, i) >= at(lambda, i + 1))) {
            return false;
        }
    }
    return rows(mu) <= L - 1;
}

Partition conjugate(const Partition &lambda) {
    Partition out;
    if (lambda.empty()) {
        return out;
    }
    for (int c = 1; c <= lambda[0]; ++c) {
        int count = 0;
        for (int x : lambda) {
            if (x >= c) {
                ++count;
            }
        }
        out.push_back(count);
    }
    return out;
}

bool majorized(const Weight &mu, const Partition &lambda) {
    if (box_count(mu) != box_count(lambda)) {
        return false;
    }
    Weight m(mu);
    std::sort(m.begin(), m.end(), std::greater<>());
    int sm = 0;
    int sl = 0;
    for (std::size_t i = 0; i < m.size(); ++i) {
        sm += m[i];
        sl += i < lambda.size() ? lambda[i] : 0;
        if (sm > sl) {
            return false;
        }
    }
    return true;
}

std::string to_string(const Partition &p) {
    if (p.empty()) {
        return "0";
    }
    return weight_to_string(p);
}

std::string weight_to_string(const Weight &w) {
    std::ostringstream os;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i > 0) {
            os << ',';
        }
        os << w[i];
    }
    return os.str();
}

Weight parse_weight(const std::string &s) {
    Weight out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(tok, &used);
        } catch (const std::exception &) {
            throw std::invalid_argument("bad integer list: '" + s + "'");
        }
        if (used != tok.size() && tok.find_first_not_of(' ', used) != std::string::npos) {
            throw std::invalid_argument("bad integer list: '" + s + "'");
        }
        if (v < 0) {
            throw std::invalid_argument("negative entry in '" + s + "'");
        }
        out.push_back(v);
    }
    if (out.empty()) {
        throw std::invalid_argument("empty integer list");
    }
    return out;
}

Partition parse_partition(const std::string &s) { return canonical(parse_weight(s)); }

} // namespace schurkit
