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
// Reference values that do not go through the Clebsch-Gordan code.
#pragma once

#include "schurkit/characters.hpp"
#include "schurkit/dense.hpp"
#include "schurkit/permutation.hpp"

namespace schurkit::test {

/// tr q_lambda(U) = sum_mu |C_mu| / n! chi^lambda(mu) prod_i tr(U^{mu_i}).
inline cplx weyl_character(const Partition &lambda, const Mat &U) {
    int n = 0;
    for (int x : lambda) {
        n += x;
    }
    if (n == 0) {
        return 1.0;
    }
    std::vector<cplx> tr(n + 1);
    Mat P = Mat::Identity(U.rows(), U.cols());
    for (int k = 1; k <= n; ++k) {
        P = P * U;
        tr[k] = P.trace();
    }
    cplx total = 0.0;
    for (const auto &mu : enumerate_partitions(n, n)) {
        cplx term = static_cast<double>(class_size(mu)) * static_cast<double>(mn_character(lambda, mu));
        for (int part : mu) {
            term *= tr[part];
        }
        total += term;
    }
    return total / static_cast<double>(factorial(n));
}

/// Kronecker product of dense matrices.
inline Mat kron(const Mat &A, const Mat &B) {
    Mat out(A.rows() * B.rows(), A.cols() * B.cols());
    for (long i = 0; i < A.rows(); ++i) {
        for (long j = 0; j < A.cols(); ++j) {
            out.block(i * B.rows(), j * B.cols(), B.rows(), B.cols()) = A(i, j) * B;
        }
    }
    return out;
}

/// max over rows of min over unit phases of |a_r - phase b_r|.
inline double row_phase_distance(const Mat &A, const Mat &B) {
    double worst = 0.0;
    for (long r = 0; r < A.rows(); ++r) {
        const cplx ov = B.row(r).conjugate().dot(A.row(r).conjugate());
        const cplx ph = std::abs(ov) > 1e-300 ? ov / std::abs(ov) : cplx(1.0);
        worst = std::max(worst, max_abs(A.row(r) - ph * B.row(r)));
    }
    return worst;
}

} // namespace schurkit::test
