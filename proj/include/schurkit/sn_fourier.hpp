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
 * Fourier transform over S_n, read off the Schur transform, and generalized
 * phase estimation with it.
 *
 * Group-algebra states are indexed by all_perms(n) (lexicographic). The
 * Fourier register is ordered by lambda (enumerate_partitions(n, n)), then
 * i, then j, with i, j in yy_index order. L(g)|h> = |gh>, R(g)|h> = |h g^-1>.
 */
#pragma once

#include "schurkit/dense.hpp"
#include "schurkit/permutation.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace schurkit {

struct FourierTransform {
    int n = 0;
    Mat U;                         ///< n! x n!, rows in Fourier order, columns in perm order
    std::vector<Partition> lambdas;
    std::vector<int> dims;         ///< dim_p per lambda
    std::vector<std::size_t> offsets;
    std::vector<std::string> row_labels;
    std::vector<std::string> col_labels;
    /// Per-row unit phases D with U L(s) U^dag = (D p(s) D^dag) (x) p(.) blockwise.
    /// All ones for the explicit transform.
    Vec phases;

    /// Row of (lambda index, i, j).
    std::size_t row(int li, int i, int j) const;
    int lambda_index(const Partition &lambda) const;
    /// U with the phases divided out, so U L(s) U^dag = p(s) (x) I exactly.
    Mat aligned() const;
};

/// sqrt(d_lambda / n!) p_lambda(g)_{ij}, with p from yy_matrix.
FourierTransform sn_qft_explicit(int n);

/**
 * Embeds |s> as the n-qudit basis state with digit s(m) at position m,
 * applies schur_unitary(n, n) and keeps the weight-(1^n) rows, reading the
 * GZ pattern as a standard tableau for the left index. The diagonal phase
 * is fitted from the adjacent transpositions (first row of each block fixed
 * to 1) and stored in `phases`. Requires n <= 5.
 */
FourierTransform sn_qft_from_schur(int n);

/// |h> -> |g h> and |h> -> |h g^-1> as n! x n! permutation matrices.
Mat left_regular(const Perm &g);
Mat right_regular(const Perm &g);

struct FourierCheck {
    Perm s1;
    Perm s2;
    double leakage = 0;
    double exact_residual = 0;   ///< against p(s1) (x) p(s2) without phase correction
    double aligned_residual = 0; ///< after dividing out the frozen phases
};

struct FourierReport {
    int n = 0;
    double unitarity = 0;  ///< max |U U^dag - I|
    std::vector<int> block_dims;
    std::vector<FourierCheck> checks;
    double max_leakage = 0;
    double max_exact_residual = 0;
    double max_aligned_residual = 0;
    Vec phases;
    bool passed = false;   ///< leakage < tol, aligned residual < tol, unitary
};

/// trials <= 0 checks every pair (s1, s2); otherwise samples pairs with the seed.
FourierReport verify_fourier(const FourierTransform &F, int trials, std::uint64_t seed,
                             double tol = 1e-10);

struct GpeOutcome {
    Partition lambda;
    double prob = 0;
    double oracle_prob = 0;     ///< <psi| Pi_lambda |psi> from characters
    Vec post_state;             ///< system state after uncomputation, normalized
    double ancilla_fidelity = 0; ///< overlap of the C[S_n] register with its initial state
    double state_fidelity = 0;   ///< |<Pi_lambda psi / |.| , post_state>|^2
};

struct GpeReport {
    std::vector<GpeOutcome> outcomes;
    double max_marginal_error = 0;
    double min_ancilla_fidelity = 1;
};

/**
 * Simulates (F (x) I) C_P on |F^dag (n),0,0> (x) psi, measures lambda, then
 * uncomputes. F defaults to sn_qft_explicit(n). Requires n! d^n <= dense cap.
 */
GpeReport gpe_measure(const Vec &state, int d, int n, const FourierTransform *F = nullptr);

struct InstrumentOutcome {
    Partition lambda;
    int x = 0;
    double prob = 0;
    double schur_prob = 0;      ///< |A_x Schur-route image|^2
    Vec state;                  ///< unnormalized system state after uncomputation
    double ancilla_fidelity = 0;
    double residual = 0;        ///< max |state - U_Sch^dag (I (x) A_x) U_Sch psi|
};

struct InstrumentReport {
    std::vector<InstrumentOutcome> outcomes;
    double max_residual = 0;
    double total_prob = 0;
};

/**
 * Runs the phase-estimation circuit with A_x applied to the right Fourier
 * index of block lambda. Lambdas missing from `ops` get the single
 * outcome {I}. Throws std::invalid_argument unless sum_x A^dag A = I.
 */
InstrumentReport gpe_instrument(const std::map<Partition, std::vector<Mat>> &ops, const Vec &state,
                                int d, int n, double norm_tol = 1e-8);

} // namespace schurkit
