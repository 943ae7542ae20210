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
#include "schurkit/tableaux.hpp"

#include "schurkit/dimensions.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace schurkit {

Weight weight(const GZPattern &q) {
    Weight w;
    int prev = 0;
    for (const auto &level : q.chain) {
        const int s = box_count(level);
        w.push_back(s - prev);
        prev = s;
    }
    return w;
}

bool is_valid(const GZPattern &q) {
    for (int j = 0; j < q.d(); ++j) {
        const auto &level = q.chain[j];
        if (!is_partition(level) || rows(level) > j + 1 || (!level.empty() && level.back() == 0)) {
            return false;
        }
        if (j > 0 && !interlaces(q.chain[j - 1], level)) {
            return false;
        }
    }
    return true;
}

bool is_valid(const YYPath &p) {
    for (int k = 0; k < p.n(); ++k) {
        const auto &level = p.chain[k];
        if (!is_partition(level) || box_count(level) != k + 1 ||
            (!level.empty() && level.back() == 0)) {
            return false;
        }
        if (k > 0) {
            bool found = false;
            for (const auto &mu : remove_box(level)) {
                found = found || mu == p.chain[k - 1];
            }
            if (!found) {
                return false;
            }
        }
    }
    return true;
}

namespace {

// Interlacing mu below lambda with at most `max_rows` rows, in partition order.
void interlacing_rec(const std::vector<int> &lam, int i, int max_rows, Partition &cur,
                     std::vector<Partition> &out) {
    if (i == max_rows) {
        out.push_back(canonical(cur));
        return;
    }
    const int hi = lam[i];
    const int lo = i + 1 < static_cast<int>(lam.size()) ? lam[i + 1] : 0;
    for (int x = hi; x >= lo; --x) {
        cur.push_back(x);
        interlacing_rec(lam, i + 1, max_rows, cur, out);
        cur.pop_back();
    }
}

std::vector<Partition> interlacing_below(const Partition &lambda, int d) {
    std::vector<Partition> out;
    const auto lam = padded(lambda, d);
    Partition cur;
    interlacing_rec(lam, 0, d - 1, cur, out);
    return out;
}

void gz_rec(const Partition &lambda, int d, std::vector<GZPattern> &out) {
    if (d == 1) {
        out.push_back(GZPattern{{lambda}});
        return;
    }
    for (const auto &mu : interlacing_below(lambda, d)) {
        std::vector<GZPattern> sub;
        gz_rec(mu, d - 1, sub);
        for (auto &s : sub) {
            s.chain.push_back(lambda);
            out.push_back(std::move(s));
        }
    }
}

void yy_rec(const Partition &lambda, std::vector<YYPath> &out) {
    if (box_count(lambda) == 1) {
        out.push_back(YYPath{{lambda}});
        return;
    }
    auto below = remove_box(lambda);
    std::sort(below.begin(), below.end(), partition_before);
    for (const auto &mu : below) {
        std::vector<YYPath> sub;
        yy_rec(mu, sub);
        for (auto &s : sub) {
            s.chain.push_back(lambda);
            out.push_back(std::move(s));
        }
    }
}

} // namespace

std::vector<GZPattern> enumerate_gz(const Partition &lambda, int d) {
    if (d < 1) {
        throw std::invalid_argument("enumerate_gz needs d >= 1");
    }
    if (rows(lambda) > d) {
        throw std::invalid_argument("partition " + to_string(lambda) + " has more than d rows");
    }
    std::vector<GZPattern> out;
    gz_rec(canonical(lambda), d, out);
    return out;
}

std::vector<YYPath> enumerate_yy(const Partition &lambda) {
    std::vector<YYPath> out;
    const auto lam = canonical(lambda);
    if (lam.empty()) {
        out.emplace_back();
        return out;
    }
    yy_rec(lam, out);
    return out;
}

int yy_index(const YYPath &p) {
    if (!is_valid(p) || p.n() == 0) {
        throw std::invalid_argument("invalid YY path: " + to_string(p));
    }
    long long f = 1;
    for (int k = 1; k < p.n(); ++k) {
        for (const auto &mu : remove_box(p.chain[k])) {
            if (partition_before(mu, p.chain[k - 1])) {
                f += static_cast<long long>(dim_p(mu));
            }
        }
    }
    return static_cast<int>(f);
}

YYPath yy_unindex(const Partition &lambda, int k) {
    const auto lam = canonical(lambda);
    if (lam.empty()) {
        throw std::invalid_argument("yy_unindex: empty partition");
    }
    const auto total = dim_p(lam);
    if (k < 1 || static_cast<unsigned long long>(k) > total) {
        throw std::out_of_range("yy_unindex: index " + std::to_string(k) + " outside [1, " +
                                std::to_string(total) + "]");
    }
    // Walk down from lambda choosing the sub-block that contains k.
    std::vector<Partition> rev{lam};
    Partition cur = lam;
    long long rem = k - 1;
    while (box_count(cur) > 1) {
        auto below = remove_box(cur);
        std::sort(below.begin(), below.end(), partition_before);
        for (const auto &mu : below) {
            const auto dm = static_cast<long long>(dim_p(mu));
            if (rem < dm) {
                cur = mu;
                break;
            }
            rem -= dm;
        }
        rev.push_back(cur);
    }
    return YYPath{std::vector<Partition>(rev.rbegin(), rev.rend())};
}

GZPattern defining_pattern(int i, int d) {
    if (i < 1 || i > d) {
        throw std::out_of_range("defining_pattern: basis index outside [1, d]");
    }
    GZPattern q;
    for (int k = 1; k <= d; ++k) {
        q.chain.push_back(k >= i ? Partition{1} : Partition{});
    }
    return q;
}

GZTable::GZTable(const Partition &lambda, int d)
    : lambda_(canonical(lambda)), d_(d), patterns_(enumerate_gz(lambda, d)) {
    for (int i = 0; i < size(); ++i) {
        index_.emplace(patterns_[i].chain, i);
    }
}

int GZTable::index_of(const GZPattern &q) const {
    auto it = index_.find(q.chain);
    return it == index_.end() ? -1 : it->second;
}

namespace {

std::string join_chain(const std::vector<Partition> &chain) {
    std::ostringstream os;
    for (std::size_t i = 0; i < chain.size(); ++i) {
        if (i > 0) {
            os << ';';
        }
        os << to_string(chain[i]);
    }
    return os.str();
}

std::vector<Partition> split_chain(const std::string &s) {
    std::vector<Partition> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ';')) {
        out.push_back(parse_partition(tok));
    }
    return out;
}

} // namespace

std::string to_string(const GZPattern &q) { return join_chain(q.chain); }
std::string to_string(const YYPath &p) { return join_chain(p.chain); }

GZPattern parse_gz(const std::string &s) {
    GZPattern q{split_chain(s)};
    if (!is_valid(q)) {
        throw std::invalid_argument("invalid GZ pattern: " + s);
    }
    return q;
}

YYPath parse_yy(const std::string &s) {
    YYPath p{split_chain(s)};
    if (!is_valid(p)) {
        throw std::invalid_argument("invalid YY path: " + s);
    }
    return p;
}

} // namespace schurkit
