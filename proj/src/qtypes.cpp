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
#include "schurkit/qtypes.hpp"

#include "schurkit/dimensions.hpp"
#include "schurkit/schur_transform.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <random>
#include <stdexcept>

namespace schurkit {

namespace {

constexpr double kRel = 1e-12;

bool le(double a, double b) { return a <= b * (1.0 + kRel) + 1e-300; }

} // namespace

double entropy(const std::vector<double> &p) {
    double h = 0.0;
    for (double x : p) {
        if (x > 0.0) {
            h -= x * std::log2(x);
        }
    }
    return h;
}

double relative_entropy(const std::vector<double> &p, const std::vector<double> &q) {
    if (p.size() != q.size()) {
        throw std::invalid_argument("relative_entropy: length mismatch");
    }
    double out = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] <= 0.0) {
            continue;
        }
        if (q[i] <= 0.0) {
            return std::numeric_limits<double>::infinity();
        }
        out += p[i] * std::log2(p[i] / q[i]);
    }
    return std::max(out, 0.0);
}

double eta(double eps) {
    if (eps <= 0.0) {
        return 0.0;
    }
    if (eps <= std::exp(-1.0)) {
        return -eps * std::log2(eps);
    }
    return std::log2(std::exp(1.0)) / std::exp(1.0);
}

double l1_distance(const std::vector<double> &a, const std::vector<double> &b) {
    if (a.size() != b.size()) {
        throw std::invalid_argument("l1_distance: length mismatch");
    }
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        s += std::abs(a[i] - b[i]);
    }
    return s;
}

std::vector<double> normalized_shape(const Partition &lambda, int d) {
    const auto lam = padded(canonical(lambda), d);
    const double n = box_count(lam);
    std::vector<double> out(d);
    for (int i = 0; i < d; ++i) {
        out[i] = n > 0 ? lam[i] / n : 0.0;
    }
    return out;
}

std::vector<double> spectrum_vector(const std::vector<double> &r, double tol) {
    if (r.empty()) {
        throw std::invalid_argument("empty probability vector");
    }
    double s = 0.0;
    for (double x : r) {
        if (x < 0.0) {
            throw std::invalid_argument("probability vector has a negative entry");
        }
        s += x;
    }
    if (std::abs(s - 1.0) > tol) {
        throw std::invalid_argument("probability vector does not sum to one");
    }
    std::vector<double> out(r);
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

double lambda_probability(const Partition &lambda, const std::vector<double> &r) {
    return dim_p_real(lambda) * schur_poly(lambda, r);
}

std::vector<double> lambda_distribution(const std::vector<double> &r, int n) {
    const int d = static_cast<int>(r.size());
    std::map<std::pair<Partition, int>, double> memo;
    std::vector<double> out;
    for (const auto &lam : enumerate_partitions(d, n)) {
        out.push_back(dim_p_real(lam) * detail::schur_rec(lam, r, d, memo));
    }
    return out;
}

TypeBoundsReport classical_type_bounds(const Weight &t, const std::vector<double> &P) {
    if (t.size() != P.size()) {
        throw std::invalid_argument("classical_type_bounds: t and P differ in length");
    }
    double s = 0.0;
    for (double x : P) {
        if (x < 0.0) {
            throw std::invalid_argument("classical_type_bounds: negative probability");
        }
        s += x;
    }
    if (std::abs(s - 1.0) > 1e-9) {
        throw std::invalid_argument("classical_type_bounds: P does not sum to one");
    }
    const int d = static_cast<int>(t.size());
    const int n = box_count(t);
    std::vector<double> tbar(d);
    for (int i = 0; i < d; ++i) {
        tbar[i] = n > 0 ? static_cast<double>(t[i]) / n : 0.0;
    }
    const double H = entropy(tbar);
    const double D = relative_entropy(tbar, P);
    TypeBoundsReport rep;
    rep.type_class_size = multinomial(t);
    rep.mass = static_cast<double>(rep.type_class_size);
    for (int i = 0; i < d; ++i) {
        rep.mass *= std::pow(P[i], t[i]);
    }
    const double poly = std::pow(n + 1.0, -d);

    auto &sb = rep.size_bound;
    sb.value = static_cast<double>(rep.type_class_size);
    sb.upper = std::exp2(n * H);
    sb.lower = poly * sb.upper;
    sb.holds = le(sb.lower, sb.value) && le(sb.value, sb.upper);

    auto &mb = rep.mass_bound;
    mb.value = rep.mass;
    mb.upper = std::isinf(D) ? 0.0 : std::exp2(-n * D);
    mb.lower = poly * mb.upper;
    mb.upper_trivial = mb.upper >= 1.0;
    mb.lower_trivial = mb.lower <= 0.0;
    mb.holds = le(mb.lower, mb.value) && le(mb.value, mb.upper);
    return rep;
}

TypicalMassReport typical_mass(const std::vector<double> &r_in, int n, double delta) {
    if (delta <= 0.0) {
        throw std::invalid_argument("typical_mass: delta must be positive");
    }
    const auto r = spectrum_vector(r_in);
    const int d = static_cast<int>(r.size());
    const auto lams = enumerate_partitions(d, n);
    const auto dist = lambda_distribution(r, n);
    TypicalMassReport rep;
    for (std::size_t k = 0; k < lams.size(); ++k) {
        if (l1_distance(normalized_shape(lams[k], d), r) <= delta + 1e-12) {
            rep.mass += dist[k];
            rep.dimension += dim_q_real(lams[k], d) * dim_p_real(lams[k]);
        }
    }
    const double poly = std::pow(n + d, 0.5 * d * (d + 1));
    rep.lower_bound = 1.0 - poly * std::exp2(-n * delta * delta / 2.0);
    rep.trivially_satisfied = rep.lower_bound <= 0.0;
    rep.holds = rep.trivially_satisfied || rep.mass >= rep.lower_bound - 1e-12;
    rep.dimension_bound = poly * std::exp2(n * (entropy(r) + eta(delta) + delta * std::log2(d)));
    return rep;
}

BoundCheck trace_bound_check(const Partition &lambda, const std::vector<double> &r_in, int n, int d) {
    const auto r = spectrum_vector(r_in);
    const auto lam = canonical(lambda);
    if (static_cast<int>(r.size()) != d || box_count(lam) != n || rows(lam) > d) {
        throw std::invalid_argument("trace_bound_check: need lambda in I_{d,n} and r of length d");
    }
    BoundCheck b;
    b.value = lambda_probability(lam, r);
    const double D = relative_entropy(normalized_shape(lam, d), r);
    const double base = std::isinf(D) ? 0.0 : std::exp2(-n * D);
    b.lower = base * std::pow(n + d, -0.5 * d * (d + 1));
    b.upper = base * std::pow(n + d, 0.5 * d * (d - 1));
    b.lower_trivial = b.lower <= 0.0;
    b.upper_trivial = b.upper >= 1.0;
    b.holds = le(b.lower, b.value) && le(b.value, b.upper);
    return b;
}

SpectrumEstimateReport spectrum_estimate(const std::vector<double> &r_in, int n, int trials,
                                         std::uint64_t seed, const std::vector<double> &deltas,
                                         bool keep_trials) {
    if (trials < 0) {
        throw std::invalid_argument("spectrum_estimate: trials must be nonnegative");
    }
    const auto r = spectrum_vector(r_in);
    const int d = static_cast<int>(r.size());
    SpectrumEstimateReport rep;
    rep.support = enumerate_partitions(d, n);
    rep.distribution = lambda_distribution(r, n);
    rep.deltas = deltas;
    std::vector<double> err(rep.support.size());
    std::vector<std::vector<double>> shapes;
    for (std::size_t k = 0; k < rep.support.size(); ++k) {
        shapes.push_back(normalized_shape(rep.support[k], d));
        err[k] = l1_distance(shapes.back(), r);
    }
    std::mt19937_64 rng(seed);
    std::discrete_distribution<std::size_t> pick(rep.distribution.begin(), rep.distribution.end());
    std::vector<long long> fails(deltas.size(), 0);
    for (int t = 0; t < trials; ++t) {
        const std::size_t k = pick(rng);
        for (std::size_t i = 0; i < deltas.size(); ++i) {
            if (err[k] > deltas[i]) {
                ++fails[i];
            }
        }
        if (keep_trials) {
            rep.trials.push_back(SpectrumEstimateTrial{rep.support[k], shapes[k], err[k]});
        }
    }
    const double poly = std::pow(n + d, 0.5 * d * (d + 1));
    for (std::size_t i = 0; i < deltas.size(); ++i) {
        double exact = 0.0;
        for (std::size_t k = 0; k < err.size(); ++k) {
            if (err[k] > deltas[i]) {
                exact += rep.distribution[k];
            }
        }
        const double emp = trials > 0 ? static_cast<double>(fails[i]) / trials : 0.0;
        const double bound = poly * std::exp2(-n * deltas[i] * deltas[i] / 2.0);
        const double sigma = trials > 0 ? std::sqrt(exact * (1.0 - exact) / trials) : 0.0;
        rep.failure_rate.push_back(emp);
        rep.exact_failure.push_back(exact);
        rep.failure_bound.push_back(bound);
        rep.within_bound.push_back(emp <= std::min(1.0, bound) + 3.0 * sigma + 1e-15);
    }
    return rep;
}

ConcentrationReport concentrate(const Mat &psi, int n, int samples, std::uint64_t seed, double tol) {
    const int d = static_cast<int>(psi.rows());
    if (psi.cols() != d) {
        throw std::invalid_argument("concentrate: psi must be a d x d coefficient matrix");
    }
    if (std::abs(psi.norm() - 1.0) > 1e-8) {
        throw std::invalid_argument("concentrate: psi is not normalized");
    }
    const std::size_t D = checked_power(d, n, dense_cap());
    if (D * D > dense_cap()) {
        throw std::length_error("concentrate: (d^n)^2 exceeds the dense cap");
    }
    const auto st = schur_unitary(d, n);
    const auto &codec = st->codec;
    const RMat U = RMat(st->U);
    const Mat out = U.cast<cplx>() * tensor_power(psi, n) * U.transpose().cast<cplx>();

    Eigen::SelfAdjointEigenSolver<Mat> es(psi * psi.adjoint());
    std::vector<double> r(d);
    for (int i = 0; i < d; ++i) {
        r[i] = std::max(0.0, es.eigenvalues()(i));
    }
    std::sort(r.begin(), r.end(), std::greater<>());

    ConcentrationReport rep;
    const int L = codec.num_lambdas();
    std::vector<double> pair_mass(static_cast<std::size_t>(L) * L, 0.0);
    for (int a = 0; a < L; ++a) {
        for (int b = 0; b < L; ++b) {
            const auto oa = static_cast<long>(codec.block_offset(a));
            const auto ob = static_cast<long>(codec.block_offset(b));
            const long la = static_cast<long>(codec.dim_q(a)) * codec.dim_p(a);
            const long lb = static_cast<long>(codec.dim_q(b)) * codec.dim_p(b);
            const double m = out.block(oa, ob, la, lb).squaredNorm();
            pair_mass[a * L + b] = m;
            if (a != b) {
                rep.cross_lambda_mass += m;
            }
        }
    }
    bool ok = rep.cross_lambda_mass < tol;
    for (int li = 0; li < L; ++li) {
        ConcentrationBranch br;
        br.lambda = codec.lambda(li);
        const int Q = codec.dim_q(li);
        const int P = codec.dim_p(li);
        const auto off = static_cast<long>(codec.block_offset(li));
        const Mat B = out.block(off, off, static_cast<long>(Q) * P, static_cast<long>(Q) * P);
        br.prob = B.squaredNorm();
        br.oracle_prob = lambda_probability(br.lambda, r);
        ok = ok && std::abs(br.prob - br.oracle_prob) < tol;
        if (br.prob > 1e-12) {
            // Rearrange to (qA qB) x (pA pB); a product q (x) p state has rank one.
            Mat R(static_cast<long>(Q) * Q, static_cast<long>(P) * P);
            for (int qa = 0; qa < Q; ++qa) {
                for (int qb = 0; qb < Q; ++qb) {
                    for (int pa = 0; pa < P; ++pa) {
                        for (int pb = 0; pb < P; ++pb) {
                            R(qa * Q + qb, pa * P + pb) = B(qa * P + pa, qb * P + pb);
                        }
                    }
                }
            }
            Eigen::JacobiSVD<Mat> svd(R, Eigen::ComputeThinU | Eigen::ComputeThinV);
            const auto &sv = svd.singularValues();
            double rest = 0.0;
            for (long k = 1; k < sv.size(); ++k) {
                rest += sv(k) * sv(k);
            }
            br.factor_residual = std::sqrt(rest / br.prob);
            Mat F(P, P);
            const Vec v = svd.matrixV().col(0).conjugate();
            for (int pa = 0; pa < P; ++pa) {
                for (int pb = 0; pb < P; ++pb) {
                    F(pa, pb) = v(pa * P + pb);
                }
            }
            Eigen::JacobiSVD<Mat> fs(F);
            const double target = 1.0 / std::sqrt(static_cast<double>(P));
            for (long k = 0; k < fs.singularValues().size(); ++k) {
                br.schmidt.push_back(fs.singularValues()(k));
                br.schmidt_deviation = std::max(br.schmidt_deviation, std::abs(fs.singularValues()(k) - target));
            }
            // Reduced state on pA after tracing qA, qB and pB.
            Mat rhoP = Mat::Zero(P, P);
            for (int qa = 0; qa < Q; ++qa) {
                const Mat rowsA = B.block(static_cast<long>(qa) * P, 0, P, B.cols());
                rhoP += rowsA * rowsA.adjoint();
            }
            rhoP /= br.prob;
            br.mixedness_deviation = max_abs(rhoP - Mat::Identity(P, P) / static_cast<double>(P));
            ok = ok && br.schmidt_deviation < tol && br.mixedness_deviation < tol &&
                 br.factor_residual < std::sqrt(tol);
        }
        rep.branches.push_back(std::move(br));
    }
    if (samples > 0) {
        std::mt19937_64 rng(seed);
        std::discrete_distribution<int> pick(pair_mass.begin(), pair_mass.end());
        for (int t = 0; t < samples; ++t) {
            const int k = pick(rng);
            if (k / L != k % L) {
                ++rep.disagreements;
            }
        }
        rep.sampled = samples;
    }
    rep.verified = ok && rep.disagreements == 0;
    return rep;
}

CompressionReport compress_rate(const std::vector<double> &r_in, int n, double R) {
    if (R <= 0.0 || n < 1) {
        throw std::invalid_argument("compress_rate: need R > 0 and n >= 1");
    }
    const auto r = spectrum_vector(r_in);
    const int d = static_cast<int>(r.size());
    CompressionReport rep;
    rep.rate_threshold = R - d * (d + 1) * std::log2(n + d) / (2.0 * n);
    rep.qubits = n * R;
    const auto lams = enumerate_partitions(d, n);
    const auto dist = lambda_distribution(r, n);
    double min_d = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < lams.size(); ++k) {
        const auto shape = normalized_shape(lams[k], d);
        if (entropy(shape) <= rep.rate_threshold + 1e-12) {
            rep.kept_mass += dist[k];
            rep.kept_dimension += dim_q_real(lams[k], d) * dim_p_real(lams[k]);
        } else {
            min_d = std::min(min_d, relative_entropy(shape, r));
        }
    }
    rep.error_mass = std::max(0.0, 1.0 - rep.kept_mass);
    rep.dimension_ok = rep.kept_dimension <= std::exp2(rep.qubits) * (1.0 + kRel);
    rep.error_bound = std::isinf(min_d) ? 0.0 : std::pow(n + d, 0.5 * d * (d + 1)) * std::exp2(-n * min_d);
    rep.error_bound_trivial = rep.error_bound >= 1.0;
    rep.error_ok = rep.error_bound_trivial || le(rep.error_mass, rep.error_bound) ||
                   rep.error_mass < 1e-12;
    return rep;
}

} // namespace schurkit
