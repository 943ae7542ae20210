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
#include "doctest.h"

#include "schurkit/dimensions.hpp"
#include "schurkit/qtypes.hpp"
#include "schurkit/schur_transform.hpp"

#include <cmath>
#include <limits>
#include <random>

using namespace schurkit;

TEST_CASE("entropies and distances") {
    CHECK(entropy({0.5, 0.5}) == doctest::Approx(1.0));
    CHECK(entropy({1.0, 0.0}) == doctest::Approx(0.0));
    CHECK(entropy({0.25, 0.25, 0.25, 0.25}) == doctest::Approx(2.0));
    CHECK(relative_entropy({0.5, 0.5}, {0.5, 0.5}) == doctest::Approx(0.0));
    CHECK(relative_entropy({1.0, 0.0}, {0.5, 0.5}) == doctest::Approx(1.0));
    CHECK(std::isinf(relative_entropy({0.5, 0.5}, {1.0, 0.0})));
    CHECK(l1_distance({1, 0}, {0, 1}) == doctest::Approx(2.0));
    CHECK(eta(0.0) == 0.0);
    CHECK(eta(0.25) == doctest::Approx(0.5));
    CHECK(normalized_shape({3, 1}, 3) == std::vector<double>{0.75, 0.25, 0.0});
    CHECK(spectrum_vector({0.2, 0.8}) == std::vector<double>{0.8, 0.2});
    CHECK_THROWS_AS(spectrum_vector({0.5, 0.6}), std::invalid_argument);
    CHECK_THROWS_AS(spectrum_vector({1.5, -0.5}), std::invalid_argument);
}

TEST_CASE("lambda distribution sums to one and matches projector traces") {
    const std::vector<double> r{0.6, 0.3, 0.1};
    for (int n = 1; n <= 12; ++n) {
        const auto dist = lambda_distribution(r, n);
        double s = 0;
        for (double x : dist) {
            CHECK(x >= 0.0);
            s += x;
        }
        CHECK(s == doctest::Approx(1.0).epsilon(1e-12));
    }
    // Against tr Pi_lambda rho^{(x)n} built densely.
    const int n = 3, d = 3;
    Mat rho = Mat::Zero(d, d);
    for (int i = 0; i < d; ++i) {
        rho(i, i) = r[i];
    }
    const Mat rn = tensor_power(rho, n);
    for (const auto &lam : enumerate_partitions(d, n)) {
        const double tr = (central_projector_oracle(lam, d, n).matrix * rn).trace().real();
        CHECK(lambda_probability(lam, r) == doctest::Approx(tr).epsilon(1e-10));
    }
}

TEST_CASE("classical type bounds hold for every type") {
    const std::vector<double> P{0.5, 0.3, 0.2};
    for (int n = 1; n <= 12; ++n) {
        double total_mass = 0;
        for (const auto &t : enumerate_weights(3, n)) {
            const auto rep = classical_type_bounds(t, P);
            CHECK(rep.type_class_size == multinomial(t));
            CHECK(rep.size_bound.holds);
            CHECK(rep.mass_bound.holds);
            total_mass += rep.mass;
        }
        CHECK(total_mass == doctest::Approx(1.0).epsilon(1e-10));
    }
}

TEST_CASE("trace bounds hold for every lambda") {
    for (const auto &r : std::vector<std::vector<double>>{{0.7, 0.3}, {0.5, 0.3, 0.2}, {0.4, 0.3, 0.2, 0.1}}) {
        const int d = static_cast<int>(r.size());
        for (int n = 1; n <= 20; n += 3) {
            for (const auto &lam : enumerate_partitions(d, n)) {
                const auto b = trace_bound_check(lam, r, n, d);
                CAPTURE(n);
                CHECK(b.holds);
                CHECK(b.value <= b.upper * (1 + 1e-9));
                CHECK(b.value >= b.lower * (1 - 1e-9));
            }
        }
    }
}

TEST_CASE("typical mass and dimension") {
    for (int n : {10, 50, 200}) {
        const auto rep = typical_mass({0.8, 0.2}, n, 0.3);
        CHECK(rep.holds);
        CHECK(rep.mass <= 1.0 + 1e-12);
        CHECK(rep.dimension <= rep.dimension_bound);
    }
    // The mass tends to one.
    CHECK(typical_mass({0.8, 0.2}, 400, 0.2).mass > typical_mass({0.8, 0.2}, 20, 0.2).mass);
}

TEST_CASE("spectrum estimation is deterministic and near its exact failure rate") {
    const std::vector<double> r{0.7, 0.3};
    const auto a = spectrum_estimate(r, 16, 20000, 42, {0.1, 0.3});
    const auto b = spectrum_estimate(r, 16, 20000, 42, {0.1, 0.3});
    CHECK(a.failure_rate == b.failure_rate);
    REQUIRE(a.failure_rate.size() == 2);
    double s = 0;
    for (double x : a.distribution) {
        s += x;
    }
    CHECK(s == doctest::Approx(1.0));
    for (std::size_t k = 0; k < 2; ++k) {
        const double p = a.exact_failure[k];
        const double sigma = std::sqrt(p * (1 - p) / 20000.0);
        CHECK(std::abs(a.failure_rate[k] - p) <= 5 * sigma + 1e-12);
        CHECK(a.within_bound[k]);
    }
    const auto kept = spectrum_estimate(r, 8, 10, 1, {0.2}, true);
    CHECK(kept.trials.size() == 10);
    for (const auto &t : kept.trials) {
        CHECK(box_count(t.lambda) == 8);
        CHECK(t.l1_error == doctest::Approx(l1_distance(t.estimate, r)));
    }
}

TEST_CASE("concentration of random and product states") {
    std::mt19937_64 rng(31);
    for (int d = 2; d <= 3; ++d) {
        const Vec v = random_state(static_cast<std::size_t>(d * d), rng);
        const Mat psi = v.reshaped(d, d);
        const int n = d == 2 ? 4 : 3;
        const auto rep = concentrate(psi, n, 200, 5);
        CHECK(rep.verified);
        CHECK(rep.cross_lambda_mass < 1e-10);
        CHECK(rep.disagreements == 0);
        double total = 0;
        for (const auto &b : rep.branches) {
            CHECK(std::abs(b.prob - b.oracle_prob) < 1e-10);
            if (b.prob > 1e-10) {
                CHECK(b.schmidt_deviation < 1e-8);
                CHECK(b.mixedness_deviation < 1e-8);
                CHECK(static_cast<int>(b.schmidt.size()) == static_cast<int>(dim_p(b.lambda)));
            }
            total += b.prob;
        }
        CHECK(total == doctest::Approx(1.0));
    }
    // A product state sits entirely in the symmetric branch.
    Mat prod = Mat::Zero(2, 2);
    prod(0, 0) = 1.0;
    const auto rep = concentrate(prod, 4);
    CHECK(rep.verified);
    for (const auto &b : rep.branches) {
        CHECK(b.prob == doctest::Approx(b.lambda == Partition{4} ? 1.0 : 0.0));
    }
}

TEST_CASE("compression error falls with n") {
    const std::vector<double> r{0.9, 0.1};
    const double R = 0.8;
    double prev = 1.0;
    for (int n : {20, 40, 80, 160}) {
        const auto rep = compress_rate(r, n, R);
        CHECK(rep.dimension_ok);
        CHECK(rep.kept_mass + rep.error_mass == doctest::Approx(1.0));
        CHECK(rep.error_mass <= prev + 1e-12);
        if (!rep.error_bound_trivial) {
            CHECK(rep.error_ok);
        }
        prev = rep.error_mass;
    }
    CHECK(prev < 0.2);
}
