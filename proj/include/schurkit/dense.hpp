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
 * Dense complex kernels on (C^d)^{(x)n}.
 *
 * Computational basis index: the first tensor factor is the most significant
 * digit, |i_1 ... i_n> -> i_1 d^{n-1} + ... + i_n.
 */
#pragma once

#include "schurkit/permutation.hpp"

#include <Eigen/Dense>

#include <complex>
#include <cstddef>
#include <random>
#include <string>
#include <vector>

namespace schurkit {

using cplx = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;
using RMat = Eigen::MatrixXd;

/// Matrix with basis labels on both sides.
struct DenseOperator {
    Mat matrix;
    std::vector<std::string> row_labels;
    std::vector<std::string> col_labels;
};

/// Upper bound on d^n for dense objects; SCHURKIT_DENSE_CAP overrides the default 4096.
std::size_t dense_cap();
/// d^n, throwing std::length_error when above `cap`.
std::size_t checked_power(int d, int n, std::size_t cap);
std::size_t ipow(int d, int n);

/// Digits of a computational index, most significant first.
std::vector<int> digits(std::size_t index, int d, int n);
std::size_t from_digits(const std::vector<int> &dig, int d);
/// Labels "i_1 i_2 ... i_n" with digits 0..d-1.
std::vector<std::string> computational_labels(int d, int n);

/**
 * P(s)|i_1 ... i_n> = |i_{s^{-1}(1)} ... i_{s^{-1}(n)}>: the digit at
 * position m moves to position s(m). P(s)P(t) = P(st).
 */
std::vector<std::size_t> perm_action(const Perm &s, int d);
Mat perm_matrix(const Perm &s, int d);
/// Applies P(s) to the rows of X (each column is a state).
Mat apply_perm(const Perm &s, int d, const Mat &X);

/// A^{(x)n} X for A of size d x d and X of height d^n. A need not be unitary.
Mat apply_tensor_power(const Mat &A, int n, const Mat &X);
Mat tensor_power(const Mat &A, int n);

/// Haar-random unitary via QR with phase fix.
Mat haar_unitary(int d, std::mt19937_64 &rng);
/// Normalized complex Gaussian vector.
Vec random_state(std::size_t dim, std::mt19937_64 &rng);

double max_abs(const Mat &A);
/// max |A^dag A - I|.
double isometry_residual(const Mat &A);

} // namespace schurkit
