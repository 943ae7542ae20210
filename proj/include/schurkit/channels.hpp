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
 * Kronecker coefficients, S_n-invariant vectors in triple products of
 * irreps, and the block form of U_N^{(x)n} for a channel isometry U_N.
 *
 * Vectors on P_a (x) P_b (x) P_c are indexed (pa, pb, pc) with pa most
 * significant, each in yy_index order.
 */
#pragma once

#include "schurkit/dense.hpp"
#include "schurkit/partition.hpp"

#include <cstdint>
#include <vector>

namespace schurkit {

/// (1/n!) sum over classes of |C| chi_a chi_b chi_c, from Murnaghan-Nakayama.
std::uint64_t kronecker(const Partition &a, const Partition &b, const Partition &c);

/// (1/sqrt(dim_p)) sum_p |p, p>.
Vec phi_lambda(const Partition &lambda);

/**
 * Orthonormal basis of the vectors fixed by p_a(s) (x) p_b(s) (x) p_c(s).
 * The rank comes from the eigenvalues of the averaging projector; the
 * vectors are the projections of e_0, e_1, ... after Gram-Schmidt, each
 * signed so its first nonzero entry is positive. Requires n <= 5.
 */
std::vector<Vec> invariant_basis(const Partition &a, const Partition &b, const Partition &c);

/// max |(p_a(s) (x) p_b(s) (x) p_c(s)) v - v| over all s.
double invariance_residual(const Vec &v, const Partition &a, const Partition &b, const Partition &c);

/// Dephasing channel isometry C^2 -> C^2 (x) C^2 (output index b*2 + e).
Mat dephasing_isometry(double p);

struct NormalFormEntry {
    Partition lambda_a;
    int q_a = 0;
    Partition lambda_b;
    int q_b = 0;
    Partition lambda_e;
    int q_e = 0;
    int alpha = 0;
    cplx value;
};

struct NormalFormReport {
    int n = 0;
    int d_a = 0;
    int d_b = 0;
    int d_e = 0;
    std::vector<NormalFormEntry> entries; ///< only |V| > 1e-12 is kept
    double residual = 0;           ///< max |block - sum_alpha V W_alpha|, including g = 0 blocks
    double round_trip = 0;         ///< max |rebuilt U_N^{(x)n} - U_N^{(x)n}|
    double isometry = 0;           ///< max |sum V^* V' - delta|
    double support_violation = 0;  ///< largest block norm on a triple with g = 0
};

/**
 * U_N has size (d_b d_e) x d_a with output index b*d_e + e. Conjugates
 * U_N^{(x)n} by Schur transforms on A^n, B^n and E^n, then expands each
 * (q_a; q_b, q_e) block over W_alpha = sqrt(dim P_a) <alpha| (pB pE, pA).
 */
NormalFormReport channel_normal_form(const Mat &U_N, int d_a, int d_b, int d_e, int n);

struct TypicalTriple {
    Partition lambda_a;
    Partition lambda_b;
    Partition lambda_e;
    double max_mass = 0; ///< max over the input grid (the mass itself in triple_masses)
};

/// Projector masses of every (lambda_a, lambda_b, lambda_e) for one qubit input rho.
std::vector<TypicalTriple> triple_masses(const Mat &U_N, int d_b, int d_e, int n, const Mat &rho);

/// Bloch vectors with coordinates in {-1, -0.5, 0, 0.5, 1} and norm <= 1.
std::vector<Mat> bloch_grid();

/**
 * Triples whose projector mass on psi^{ABE (x) n} reaches eps for some
 * input on the Bloch grid, where psi^{ABE} = (I (x) U_N) sum_a |a> sqrt(rho)|a>.
 * Masses come from the character projectors. Qubit input only.
 */
std::vector<TypicalTriple> typical_triples(const Mat &U_N, int d_b, int d_e, int n, double eps);

} // namespace schurkit
