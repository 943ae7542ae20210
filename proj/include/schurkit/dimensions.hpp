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
 * Irrep dimensions, multinomials, Kostka numbers and Schur polynomials.
 *
 * Integer results are exact; overflow of 64 bits throws std::overflow_error.
 */
#pragma once

#include "schurkit/partition.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

namespace schurkit {

using Rational = boost::multiprecision::cpp_rational;

/// dim Q_lambda^d = prod_{i<j} (lt_i - lt_j) / (j - i), lt = lambda + (d-1, ..., 0).
std::uint64_t dim_q(const Partition &lambda, int d);
/// dim P_lambda = n! prod_{i<j} (lt_i - lt_j) / prod_i lt_i!, with d = rows(lambda).
std::uint64_t dim_p(const Partition &lambda);
/// Floating-point dim_q and dim_p, usable when the exact value exceeds 64 bits.
double dim_q_real(const Partition &lambda, int d);
double dim_p_real(const Partition &lambda);
/// n! / prod_i t_i!.
std::uint64_t multinomial(const Weight &t);

/// Number of GZ patterns of shape lambda and weight mu (d = mu.size()).
std::uint64_t kostka(const Partition &lambda, const Weight &mu);

namespace detail {

template <class T>
T ipow(const T &x, int e) {
    T out(1);
    for (int i = 0; i < e; ++i) {
        out *= x;
    }
    return out;
}

// s_lambda(r_1..r_d) = sum_{mu interlacing lambda} r_d^{|lambda|-|mu|} s_mu(r_1..r_{d-1}).
template <class T>
T schur_rec(const Partition &lambda, const std::vector<T> &r, int d,
            std::map<std::pair<Partition, int>, T> &memo) {
    if (rows(lambda) > d) {
        return T(0);
    }
    if (d == 1) {
        return lambda.empty() ? T(1) : ipow(r[0], lambda[0]);
    }
    auto key = std::make_pair(lambda, d);
    if (auto it = memo.find(key); it != memo.end()) {
        return it->second;
    }
    std::vector<int> lam(lambda);
    lam.resize(d, 0);
    const int n = box_count(lambda);
    T total(0);
    std::vector<T> pow_rd(n + 1);
    pow_rd[0] = T(1);
    for (int e = 1; e <= n; ++e) {
        pow_rd[e] = pow_rd[e - 1] * r[d - 1];
    }
    // Enumerate mu with lam[i] >= mu[i] >= lam[i+1], i < d-1.
    std::vector<int> mu(d - 1, 0);
    std::vector<int> lo(d - 1), hi(d - 1);
    for (int i = 0; i < d - 1; ++i) {
        hi[i] = lam[i];
        lo[i] = lam[i + 1];
        mu[i] = hi[i];
    }
    while (true) {
        const int m = box_count(mu);
        total += pow_rd[n - m] * schur_rec(canonical(mu), r, d - 1, memo);
        int i = d - 2;
        while (i >= 0 && mu[i] == lo[i]) {
            mu[i] = hi[i];
            --i;
        }
        if (i < 0) {
            break;
        }
        --mu[i];
    }
    memo.emplace(key, total);
    return total;
}

} // namespace detail

/**
 * s_lambda(r) = sum_mu K_{lambda,mu} r^mu, evaluated through the branching
 * recursion. T is double or Rational. r must be nonnegative.
 */
template <class T>
T schur_poly(const Partition &lambda, const std::vector<T> &r) {
    for (const auto &x : r) {
        if (x < 0) {
            throw std::invalid_argument("schur_poly: negative entry");
        }
    }
    if (r.empty()) {
        throw std::invalid_argument("schur_poly: empty argument");
    }
    std::map<std::pair<Partition, int>, T> memo;
    return detail::schur_rec(canonical(lambda), r, static_cast<int>(r.size()), memo);
}

/// Reference evaluation straight from the Kostka expansion (test oracle).
double schur_poly_kostka(const Partition &lambda, const std::vector<double> &r);

} // namespace schurkit
