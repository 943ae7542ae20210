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
 * Reduced Wigner coefficients and the U(d) Clebsch-Gordan transform for
 * Q_lambda (x) C^d, built recursively from U(d-1).
 */
#pragma once

#include "schurkit/dense.hpp"
#include "schurkit/tableaux.hpp"

#include <optional>
#include <vector>

namespace schurkit {

/**
 * Coefficient <mu + e_j, mu' + e_j' | mu, mu'>. mu has at most d rows,
 * mu' at most d-1 rows; j in [1, d]; j' in [0, d-1] with e_0 = 0.
 */
struct ReducedWignerQuery {
    Partition mu;
    int j = 1;
    Partition mu_prime;
    int j_prime = 0;
};

/**
 * Closed-form ratio of products under a principal square root. With
 * mt = mu + (d-1, ..., 0) and mpt = mu' + (d-2, ..., 0), for j' >= 1
 *
 *   T = s * sqrt( prod_{s != j'} (mt_j - mpt_s) prod_{t != j} (mpt_j' - mt_t + 1)
 *               / prod_{s != j} (mt_j - mt_s)  prod_{t != j'} (mpt_j' - mpt_t + 1) ),
 *
 * s = +1 if j' >= j and -1 otherwise; for j' = 0 only the first product
 * pair appears and s = +1.
 *
 * Returns std::nullopt for a structural zero: mu' does not interlace mu,
 * mu + e_j or mu' + e_j' is not a partition, or the results do not
 * interlace. The formula is never evaluated in that case.
 */
std::optional<double> reduced_wigner(const ReducedWignerQuery &query, int d);

/// d x d matrix of reduced Wigner coefficients for fixed (mu, mu'').
struct ThatMatrix {
    DenseOperator op;              ///< rows j = 1..d, columns j' = 0..d-1
    std::vector<bool> row_support; ///< mu + e_j valid and mu'' interlaces it
    std::vector<bool> col_support; ///< mu'' - e_j' valid and interlaces mu
};

/**
 * Rows and columns ruled out by the selection rules are zero, so the matrix
 * is orthogonal on its support block only. Throws if no j' is consistent.
 */
ThatMatrix that_matrix(const Partition &mu, const Partition &mu_pp, int d);

/// One output term of the CG map |q>|i> -> sum c |j, q'>.
struct CGTerm {
    int j;        ///< row that received the box, 1-based
    GZPattern out;
    double coef;
};

/**
 * Image of |q> (x) |i>, i in [1, d], under the CG transform of U(d).
 * Memoized and safe to call concurrently.
 */
std::vector<CGTerm> cg_apply(const GZPattern &q, int i, int d);

/// Dense U_CG for Q_lambda (x) C^d.
struct CGBlock {
    Partition lambda;
    int d = 0;
    std::vector<Partition> outputs; ///< add_box(lambda, d), ordered by row
    std::vector<int> output_j;      ///< row index that received the box, 1-based
    std::vector<int> offsets;       ///< first row of each output block
    /**
     * Columns: (index of q in enumerate_gz(lambda, d)) * d + (i - 1).
     * Rows: output blocks in order, each in enumerate_gz order.
     */
    DenseOperator op;
};

CGBlock cg_block(const Partition &lambda, int d);

} // namespace schurkit
