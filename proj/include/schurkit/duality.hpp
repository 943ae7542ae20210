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
 * Irrep matrices read off the Schur transform, and numerical checks that it
 * block-diagonalizes U^{(x)n} P(s).
 */
#pragma once

#include "schurkit/schur_transform.hpp"

#include <vector>

namespace schurkit {

/// q_lambda(U) in the GZ basis, from the rows (lambda, ., p = 0).
DenseOperator rep_matrix_q(const Partition &lambda, const Mat &U, int d, int n);
/// p_lambda(s) in the YY basis, from the rows (lambda, q = 0, .).
DenseOperator rep_matrix_p(const Partition &lambda, const Perm &s, int d, int n);
/// p_lambda(s) using the smallest usable d (max(1, rows(lambda))).
RMat yy_matrix(const Partition &lambda, const Perm &s);

struct IrrepBlock {
    Partition lambda;
    Mat block;           ///< (dim_q dim_p) square block of U_Sch Q(U)P(s) U_Sch^dag
    double residual = 0; ///< max |block - q_lambda(U) (x) p_lambda(s)|
};

struct IrrepBlockReport {
    std::vector<IrrepBlock> blocks;
    double leakage = 0;       ///< max |entry| outside the lambda blocks
    double max_residual = 0;  ///< max over blocks
    bool passed = false;      ///< leakage and residual both below tol
};

/// Computes U_Sch Q(U) P(s) U_Sch^dag and compares it with the direct sum of q (x) p.
IrrepBlockReport verify_block_diagonal(const Mat &U, const Perm &s, int d, int n, double tol = 1e-10,
                                       double residual_tol = 1e-9);

struct RhoBlock {
    Partition lambda;
    Mat q_block;           ///< q_lambda(rho)
    Mat p_state;           ///< conditional P-register state, trace one (zero if the block vanishes)
    double weight = 0;     ///< tr of the whole lambda block = dim_p tr q_lambda(rho)
    double factor_residual = 0; ///< max |block - q_lambda(rho) (x) I|
};

/// Blocks of U_Sch rho^{(x)n} U_Sch^dag. rho must be PSD with unit trace.
std::vector<RhoBlock> rho_blocks(const Mat &rho, int n, double tol = 1e-9);

} // namespace schurkit
