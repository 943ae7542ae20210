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
// Hand-written qubit Schur basis vectors for n = 2 and n = 3.
#pragma once

#include "schurkit/schur_transform.hpp"

#include <cmath>
#include <map>
#include <string>

namespace schurkit::test {

struct SchurVector {
    Partition lambda;
    Weight weight; ///< weight of the GZ label
    int p;         ///< 0-based YY index
    std::map<std::string, double> amps; ///< bit string -> amplitude
};

inline std::vector<SchurVector> qubit_schur_vectors(int n) {
    const double r2 = 1.0 / std::sqrt(2.0);
    const double r3 = 1.0 / std::sqrt(3.0);
    const double r6 = 1.0 / std::sqrt(6.0);
    const double t = std::sqrt(2.0 / 3.0);
    if (n == 2) {
        return {
            {{1, 1}, {1, 1}, 0, {{"01", r2}, {"10", -r2}}},
            {{2}, {2, 0}, 0, {{"00", 1.0}}},
            {{2}, {1, 1}, 0, {{"01", r2}, {"10", r2}}},
            {{2}, {0, 2}, 0, {{"11", 1.0}}},
        };
    }
    return {
        {{3}, {3, 0}, 0, {{"000", 1.0}}},
        {{3}, {2, 1}, 0, {{"001", r3}, {"010", r3}, {"100", r3}}},
        {{3}, {1, 2}, 0, {{"011", r3}, {"101", r3}, {"110", r3}}},
        {{3}, {0, 3}, 0, {{"111", 1.0}}},
        {{2, 1}, {2, 1}, 1, {{"100", r2}, {"010", -r2}}},
        {{2, 1}, {1, 2}, 1, {{"101", r2}, {"011", -r2}}},
        {{2, 1}, {2, 1}, 0, {{"001", t}, {"010", -r6}, {"100", -r6}}},
        {{2, 1}, {1, 2}, 0, {{"110", t}, {"101", -r6}, {"011", -r6}}},
    };
}

/// Largest deviation, up to a unit phase per vector, between the fixture and U_Sch rows.
inline double qubit_fixture_deviation(int n) {
    const auto st = schur_unitary(2, n);
    const auto &codec = st->codec;
    const Mat U = st->dense();
    double worst = 0.0;
    for (const auto &sv : qubit_schur_vectors(n)) {
        const int li = codec.lambda_index(sv.lambda);
        int qi = -1;
        for (int q = 0; q < codec.dim_q(li); ++q) {
            if (weight(codec.gz(li).at(q)) == sv.weight) {
                qi = q;
            }
        }
        if (qi < 0) {
            return 1.0;
        }
        Vec v = Vec::Zero(U.cols());
        for (const auto &[bits, a] : sv.amps) {
            std::vector<int> dig;
            for (char c : bits) {
                dig.push_back(c - '0');
            }
            v(static_cast<long>(from_digits(dig, 2))) = a;
        }
        const Vec row = U.row(static_cast<long>(codec.compact_index(li, qi, sv.p))).transpose();
        const cplx ov = v.dot(row);
        const cplx ph = std::abs(ov) > 0 ? ov / std::abs(ov) : cplx(1.0);
        worst = std::max(worst, max_abs(row - ph * v));
    }
    return worst;
}

} // namespace schurkit::test
