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
 * Classical and quantum method of types: typicality bounds, spectrum
 * estimation, entanglement concentration and compression.
 *
 * All logarithms and exponentials are base 2. Probability vectors r are
 * sorted into nonincreasing order before use.
 */
#pragma once

#include "schurkit/dense.hpp"
#include "schurkit/partition.hpp"

#include <cstdint>
#include <vector>

namespace schurkit {

double entropy(const std::vector<double> &p);
/// D(p || q); +infinity when p has support outside q.
double relative_entropy(const std::vector<double> &p, const std::vector<double> &q);
/// -e log e for e <= 1/e, else (log e)/e.
double eta(double eps);
double l1_distance(const std::vector<double> &a, const std::vector<double> &b);
/// lambda / n, padded to d entries.
std::vector<double> normalized_shape(const Partition &lambda, int d);
/// Sorted nonincreasing copy; throws on negative entries or sum far from one.
std::vector<double> spectrum_vector(const std::vector<double> &r, double tol = 1e-9);

/// tr Pi_lambda rho^{(x)n} = dim_p(lambda) s_lambda(r).
double lambda_probability(const Partition &lambda, const std::vector<double> &r);
/// The same over every lambda in I_{d,n}, in enumerate_partitions order.
std::vector<double> lambda_distribution(const std::vector<double> &r, int n);

/// A bound is only asserted when it can fail; vacuous sides are reported as such.
struct BoundCheck {
    double value = 0;
    double lower = 0;
    double upper = 0;
    bool lower_trivial = false;
    bool upper_trivial = false;
    bool holds = false;
};

struct TypeBoundsReport {
    std::uint64_t type_class_size = 0;
    BoundCheck size_bound; ///< (n+1)^{-d} 2^{nH} <= |T_t| <= 2^{nH}
    BoundCheck mass_bound; ///< (n+1)^{-d} 2^{-nD} <= P^n(T_t) <= 2^{-nD}
    double mass = 0;       ///< |T_t| 2^{-n(H + D)}
};

TypeBoundsReport classical_type_bounds(const Weight &t, const std::vector<double> &P);

struct TypicalMassReport {
    double mass = 0;
    double lower_bound = 0; ///< 1 - (n+d)^{d(d+1)/2} 2^{-n delta^2 / 2}
    bool trivially_satisfied = false;
    bool holds = false;
    double dimension = 0;   ///< tr of the typical projector
    double dimension_bound = 0; ///< (n+d)^{d(d+1)/2} 2^{n[H(r) + eta(delta) + delta log d]}
};

/// Mass of the typical projector, from Schur polynomials only.
TypicalMassReport typical_mass(const std::vector<double> &r, int n, double delta);

/// exp(-nD)(n+d)^{-d(d+1)/2} <= tr Pi_lambda rho^n <= exp(-nD)(n+d)^{d(d-1)/2}.
BoundCheck trace_bound_check(const Partition &lambda, const std::vector<double> &r, int n, int d);

struct SpectrumEstimateTrial {
    Partition lambda;
    std::vector<double> estimate;
    double l1_error = 0;
};

struct SpectrumEstimateReport {
    std::vector<Partition> support;      ///< I_{d,n}
    std::vector<double> distribution;    ///< dim_p s_lambda(r)
    std::vector<SpectrumEstimateTrial> trials;
    std::vector<double> deltas;
    std::vector<double> failure_rate;    ///< empirical Pr[|lambda/n - r|_1 > delta]
    std::vector<double> exact_failure;   ///< the same from the exact distribution
    std::vector<double> failure_bound;     ///< (n+d)^{d(d+1)/2} 2^{-n delta^2/2}
    std::vector<bool> within_bound;      ///< empirical <= bound + 3 sigma
};

/// Samples lambda from its exact distribution with std::mt19937_64(seed).
SpectrumEstimateReport spectrum_estimate(const std::vector<double> &r, int n, int trials,
                                         std::uint64_t seed, const std::vector<double> &deltas,
                                         bool keep_trials = false);

struct ConcentrationBranch {
    Partition lambda;
    double prob = 0;          ///< from the Schur route
    double oracle_prob = 0;   ///< dim_p s_lambda(spec rho_A)
    std::vector<double> schmidt; ///< of the conditional P_lambda pair state
    double schmidt_deviation = 0;  ///< max |s_i - 1/sqrt(dim_p)|
    double mixedness_deviation = 0; ///< max |rho_P - I/dim_p| after tracing q registers
    double factor_residual = 0;     ///< weight outside the q (x) p product form
};

struct ConcentrationReport {
    std::vector<ConcentrationBranch> branches;
    double cross_lambda_mass = 0;  ///< mass on (lambda_A != lambda_B)
    int sampled = 0;
    int disagreements = 0;
    bool verified = false;
};

/**
 * psi is the d x d coefficient matrix of a bipartite pure state. Applies
 * U_Sch to both halves of psi^{(x)n} and inspects the lambda branches.
 */
ConcentrationReport concentrate(const Mat &psi, int n, int samples = 0, std::uint64_t seed = 0,
                                double tol = 1e-8);

struct CompressionReport {
    double rate_threshold = 0; ///< R_n = R - d(d+1) log(n+d) / (2n)
    double kept_mass = 0;
    double error_mass = 0;
    double qubits = 0;         ///< nR
    double kept_dimension = 0; ///< tr Pi_R
    bool dimension_ok = false; ///< tr Pi_R <= 2^{nR}
    double error_bound = 0;    ///< (n+d)^{d(d+1)/2} 2^{-n min D} over the lambda-bar grid
    bool error_bound_trivial = false;
    bool error_ok = false;
};

CompressionReport compress_rate(const std::vector<double> &r, int n, double R);

} // namespace schurkit
