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
#include "schurkit/wigner.hpp"

#include "schurkit/dimensions.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

namespace schurkit {

namespace {

using Row = std::vector<int>;
// levels[k-1] = q_k padded to k entries.
using Levels = std::vector<Row>;

bool decreasing(const Row &r) {
    for (std::size_t i = 0; i + 1 < r.size(); ++i) {
        if (r[i] < r[i + 1]) {
            return false;
        }
    }
    return r.empty() || r.back() >= 0;
}

// mu has length L-1, lam length L.
bool interlaces_padded(const Row &mu, const Row &lam) {
    for (std::size_t i = 0; i < mu.size(); ++i) {
        if (!(lam[i] >= mu[i] && mu[i] >= lam[i + 1])) {
            return false;
        }
    }
    return true;
}

Row with_box(Row r, int j) {
    ++r[j - 1];
    return r;
}

// Formula part of the coefficient; callers have already ruled out structural zeros.
double wigner_formula(const Row &mu, int j, const Row &mup, int jp, int d) {
    std::vector<double> mt(d), mpt(d - 1);
    for (int i = 0; i < d; ++i) {
        mt[i] = mu[i] + d - 1 - i;
    }
    for (int s = 0; s < d - 1; ++s) {
        mpt[s] = mup[s] + d - 2 - s;
    }
    double num = 1.0;
    double den = 1.0;
    double sign = 1.0;
    if (jp >= 1) {
        for (int s = 1; s <= d - 1; ++s) {
            if (s != jp) {
                num *= mt[j - 1] - mpt[s - 1];
            }
        }
        for (int t = 1; t <= d; ++t) {
            if (t != j) {
                num *= mpt[jp - 1] - mt[t - 1] + 1;
            }
        }
        for (int s = 1; s <= d; ++s) {
            if (s != j) {
                den *= mt[j - 1] - mt[s - 1];
            }
        }
        for (int t = 1; t <= d - 1; ++t) {
            if (t != jp) {
                den *= mpt[jp - 1] - mpt[t - 1] + 1;
            }
        }
        sign = jp >= j ? 1.0 : -1.0;
    } else {
        for (int s = 1; s <= d - 1; ++s) {
            num *= mt[j - 1] - mpt[s - 1];
        }
        for (int s = 1; s <= d; ++s) {
            if (s != j) {
                den *= mt[j - 1] - mt[s - 1];
            }
        }
    }
    const double ratio = num / den;
    if (ratio < -1e-12) {
        throw std::logic_error("reduced_wigner: negative ratio under the square root");
    }
    return sign * std::sqrt(std::max(ratio, 0.0));
}

// Structural-zero test on padded rows.
bool allowed(const Row &mu, int j, const Row &mup, int jp, int d) {
    if (!interlaces_padded(mup, mu)) {
        return false;
    }
    const Row lam = with_box(mu, j);
    if (!decreasing(lam)) {
        return false;
    }
    Row mupp = mup;
    if (jp >= 1) {
        mupp = with_box(mup, jp);
        if (!decreasing(mupp)) {
            return false;
        }
    }
    (void)d;
    return interlaces_padded(mupp, lam);
}

std::mutex cg_mutex;
std::map<std::pair<Levels, int>, std::vector<std::pair<int, std::pair<Levels, double>>>> cg_memo;

using TermList = std::vector<std::pair<int, std::pair<Levels, double>>>;

TermList cg_rec(const Levels &q, int i) {
    const int d = static_cast<int>(q.size());
    {
        std::lock_guard<std::mutex> lock(cg_mutex);
        if (auto it = cg_memo.find({q, i}); it != cg_memo.end()) {
            return it->second;
        }
    }
    TermList out;
    if (d == 1) {
        Levels top{with_box(q[0], 1)};
        out.push_back({1, {top, 1.0}});
    } else {
        const Row &mu = q[d - 1];
        const Row &mup = q[d - 2];
        const Levels sub(q.begin(), q.end() - 1);
        // Stage 1: recurse into U(d-1), or relabel i = d as j' = 0.
        std::vector<std::pair<int, std::pair<Levels, double>>> inter;
        if (i < d) {
            inter = cg_rec(sub, i);
        } else {
            inter.push_back({0, {sub, 1.0}});
        }
        // Stage 2: combine branches j' into rows j with the reduced coefficients.
        std::map<std::pair<int, Levels>, double> acc;
        for (const auto &[jp, rest] : inter) {
            const auto &[sub2, c] = rest;
            const Row &mupp = sub2.back();
            for (int j = 1; j <= d; ++j) {
                const Row lam = with_box(mu, j);
                if (!decreasing(lam) || !interlaces_padded(mupp, lam)) {
                    continue;
                }
                const double t = wigner_formula(mu, j, mup, jp, d);
                if (t == 0.0) {
                    continue;
                }
                Levels key = sub2;
                key.push_back(lam);
                acc[{j, key}] += c * t;
            }
        }
        for (auto &[key, v] : acc) {
            if (v != 0.0) {
                out.push_back({key.first, {key.second, v}});
            }
        }
    }
    std::lock_guard<std::mutex> lock(cg_mutex);
    cg_memo.emplace(std::make_pair(q, i), out);
    return out;
}

Levels to_levels(const GZPattern &q) {
    Levels out;
    for (int k = 0; k < q.d(); ++k) {
        out.push_back(padded(q.chain[k], k + 1));
    }
    return out;
}

GZPattern from_levels(const Levels &lv) {
    GZPattern q;
    for (const auto &r : lv) {
        q.chain.push_back(canonical(r));
    }
    return q;
}

} // namespace

std::optional<double> reduced_wigner(const ReducedWignerQuery &query, int d) {
    if (d < 1) {
        throw std::invalid_argument("reduced_wigner: d must be >= 1");
    }
    if (query.j < 1 || query.j > d || query.j_prime < 0 || query.j_prime > d - 1) {
        throw std::out_of_range("reduced_wigner: j or j' out of range");
    }
    if (rows(query.mu) > d || rows(query.mu_prime) > d - 1) {
        return std::nullopt;
    }
    const Row mu = padded(canonical(query.mu), d);
    const Row mup = padded(canonical(query.mu_prime), d - 1);
    if (!allowed(mu, query.j, mup, query.j_prime, d)) {
        return std::nullopt;
    }
    return wigner_formula(mu, query.j, mup, query.j_prime, d);
}

ThatMatrix that_matrix(const Partition &mu, const Partition &mu_pp, int d) {
    if (rows(mu) > d || rows(mu_pp) > d - 1) {
        throw std::invalid_argument("that_matrix: too many rows");
    }
    const Row m = padded(canonical(mu), d);
    const Row mpp = padded(canonical(mu_pp), d - 1);
    ThatMatrix out;
    out.op.matrix = Mat::Zero(d, d);
    out.row_support.assign(d, false);
    out.col_support.assign(d, false);
    for (int j = 1; j <= d; ++j) {
        out.op.row_labels.push_back("j=" + std::to_string(j));
        const Row lam = with_box(m, j);
        out.row_support[j - 1] = decreasing(lam) && interlaces_padded(mpp, lam);
    }
    bool any = false;
    for (int jp = 0; jp < d; ++jp) {
        out.op.col_labels.push_back("j'=" + std::to_string(jp));
        Row mup = mpp;
        if (jp >= 1) {
            --mup[jp - 1];
            if (!decreasing(mup)) {
                continue;
            }
        }
        if (!interlaces_padded(mup, m)) {
            continue;
        }
        out.col_support[jp] = true;
        any = true;
        for (int j = 1; j <= d; ++j) {
            if (allowed(m, j, mup, jp, d)) {
                out.op.matrix(j - 1, jp) = wigner_formula(m, j, mup, jp, d);
            }
        }
    }
    if (!any) {
        throw std::invalid_argument("that_matrix: no branch j' is consistent with (mu, mu'')");
    }
    return out;
}

std::vector<CGTerm> cg_apply(const GZPattern &q, int i, int d) {
    if (q.d() != d || i < 1 || i > d) {
        throw std::invalid_argument("cg_apply: pattern length must be d and i in [1, d]");
    }
    std::vector<CGTerm> out;
    for (const auto &[j, rest] : cg_rec(to_levels(q), i)) {
        out.push_back(CGTerm{j, from_levels(rest.first), rest.second});
    }
    return out;
}

CGBlock cg_block(const Partition &lambda, int d) {
    CGBlock blk;
    blk.lambda = canonical(lambda);
    blk.d = d;
    const GZTable in(blk.lambda, d);
    std::vector<GZTable> outs;
    int total = 0;
    for (const auto &lp : add_box(blk.lambda, d)) {
        int j = 1;
        while (j <= rows(blk.lambda) && lp[j - 1] == blk.lambda[j - 1]) {
            ++j;
        }
        blk.outputs.push_back(lp);
        blk.output_j.push_back(j);
        blk.offsets.push_back(total);
        outs.emplace_back(lp, d);
        total += outs.back().size();
        for (const auto &p : outs.back().patterns()) {
            blk.op.row_labels.push_back("j=" + std::to_string(j) + ";" + to_string(p));
        }
    }
    const int cols = in.size() * d;
    blk.op.matrix = Mat::Zero(total, cols);
    for (int a = 0; a < in.size(); ++a) {
        for (int i = 1; i <= d; ++i) {
            blk.op.col_labels.push_back(to_string(in.at(a)) + "|" + std::to_string(i));
            for (const auto &t : cg_apply(in.at(a), i, d)) {
                std::size_t b = 0;
                while (b < blk.output_j.size() && blk.output_j[b] != t.j) {
                    ++b;
                }
                const int r = outs.at(b).index_of(t.out);
                if (r < 0) {
                    throw std::logic_error("cg_block: output pattern outside its irrep");
                }
                blk.op.matrix(blk.offsets[b] + r, a * d + (i - 1)) += t.coef;
            }
        }
    }
    return blk;
}

} // namespace schurkit
