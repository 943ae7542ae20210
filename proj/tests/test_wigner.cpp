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

#include "oracles.hpp"
#include "schurkit/dimensions.hpp"
#include "schurkit/duality.hpp"
#include "schurkit/wigner.hpp"

#include <cmath>
#include <random>

using namespace schurkit;

TEST_CASE("reduced Wigner: trivial chain and structural zeros") {
    for (int k = 0; k <= 4; ++k) {
        const auto v = reduced_wigner({k == 0 ? Partition{} : Partition{k}, 1, {}, 0}, 1);
        REQUIRE(v.has_value());
        CHECK(*v == doctest::Approx(1.0));
    }
    // mu' = (2) does not interlace mu = (1, 0).
    CHECK_FALSE(reduced_wigner({{1}, 1, {2}, 0}, 2).has_value());
    // mu + e_2 = (1, 1, ...) invalid for mu = (0, 0).
    CHECK_FALSE(reduced_wigner({{}, 2, {}, 0}, 2).has_value());
}

TEST_CASE("that_matrix is orthogonal on its support and zero elsewhere") {
    CHECK(max_abs(that_matrix({}, {}, 1).op.matrix - Mat::Identity(1, 1)) < 1e-15);
    int checked = 0;
    for (int d = 2; d <= 3; ++d) {
        for (int n = 0; n <= 4; ++n) {
            for (const auto &mu : enumerate_partitions(d, n)) {
                for (int m = 0; m <= n; ++m) {
                    for (const auto &mp : enumerate_partitions(d - 1, m)) {
                        if (!interlaces(mp, mu)) {
                            continue;
                        }
                        std::vector<Partition> targets{mp};
                        for (const auto &x : add_box(mp, d - 1)) {
                            targets.push_back(x);
                        }
                        for (const auto &mpp : targets) {
                            ThatMatrix T;
                            try {
                                T = that_matrix(mu, mpp, d);
                            } catch (const std::invalid_argument &) {
                                continue;
                            }
                            ++checked;
                            std::vector<int> rs, cs;
                            for (int j = 0; j < d; ++j) {
                                if (T.row_support[j]) {
                                    rs.push_back(j);
                                }
                                if (T.col_support[j]) {
                                    cs.push_back(j);
                                }
                            }
                            REQUIRE(rs.size() == cs.size());
                            Mat S(static_cast<long>(rs.size()), static_cast<long>(cs.size()));
                            for (std::size_t a = 0; a < rs.size(); ++a) {
                                for (std::size_t b = 0; b < cs.size(); ++b) {
                                    S(a, b) = T.op.matrix(rs[a], cs[b]);
                                }
                            }
                            const long k = S.rows();
                            CHECK(max_abs(S.adjoint() * S - Mat::Identity(k, k)) < 1e-12);
                            CHECK(max_abs(S.imag()) == 0.0);
                            for (int j = 0; j < d; ++j) {
                                for (int jp = 0; jp < d; ++jp) {
                                    if (!T.row_support[j] || !T.col_support[jp]) {
                                        CHECK(T.op.matrix(j, jp) == cplx(0.0));
                                    }
                                }
                                // Selection rule: row j is supported only when mu + e_j is a partition.
                                if (T.row_support[j]) {
                                    auto up = padded(mu, d);
                                    ++up[j];
                                    CHECK(is_partition(up));
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    CHECK(checked > 50);
}

TEST_CASE("cg_block: unitary, multiplicity free, add-a-box structure") {
    for (int d = 1; d <= 3; ++d) {
        for (int n = 0; n <= 4; ++n) {
            for (const auto &lam : enumerate_partitions(d, n)) {
                const CGBlock blk = cg_block(lam, d);
                const long dim = static_cast<long>(dim_q(lam, d)) * d;
                REQUIRE(blk.op.matrix.rows() == dim);
                REQUIRE(blk.op.matrix.cols() == dim);
                CHECK(isometry_residual(blk.op.matrix) < 1e-12);
                CHECK(max_abs(blk.op.matrix * blk.op.matrix.adjoint() - Mat::Identity(dim, dim)) < 1e-12);
                CHECK(blk.outputs == add_box(lam, d));
                long total = 0;
                for (std::size_t k = 0; k < blk.outputs.size(); ++k) {
                    CHECK(blk.offsets[k] == total);
                    total += static_cast<long>(dim_q(blk.outputs[k], d));
                    auto up = padded(lam, d);
                    ++up[blk.output_j[k] - 1];
                    CHECK(canonical(up) == blk.outputs[k]);
                }
                CHECK(total == dim);
                CHECK(blk.op.row_labels.size() == static_cast<std::size_t>(dim));
                CHECK(blk.op.col_labels.size() == static_cast<std::size_t>(dim));
            }
        }
    }
}

TEST_CASE("cg_block for the empty partition relabels the defining irrep") {
    for (int d = 1; d <= 4; ++d) {
        const CGBlock blk = cg_block({}, d);
        CHECK(max_abs(blk.op.matrix - Mat::Identity(d, d)) < 1e-15);
        CHECK(blk.outputs == std::vector<Partition>{{1}});
    }
}

TEST_CASE("cg_block for (1), d = 2 gives the triplet and singlet") {
    const CGBlock blk = cg_block({1}, 2);
    const double h = 1.0 / std::sqrt(2.0);
    Mat expected(4, 4);
    expected << 1, 0, 0, 0,   //
        0, h, h, 0,           //
        0, 0, 0, 1,           //
        0, h, -h, 0;
    CHECK(test::row_phase_distance(blk.op.matrix, expected) < 1e-12);
}

TEST_CASE("cg_block equivariance against Weyl characters") {
    std::mt19937_64 rng(5);
    for (int d = 2; d <= 3; ++d) {
        for (int n = 1; n <= 3; ++n) {
            for (const auto &lam : enumerate_partitions(d, n)) {
                const CGBlock blk = cg_block(lam, d);
                for (int trial = 0; trial < 3; ++trial) {
                    const Mat U = haar_unitary(d, rng);
                    const Mat q = rep_matrix_q(lam, U, d, n).matrix;
                    // Character of q_lambda(U) from Murnaghan-Nakayama power sums.
                    CHECK(std::abs(q.trace() - test::weyl_character(lam, U)) < 1e-10);
                    const Mat X = blk.op.matrix * test::kron(q, U) * blk.op.matrix.adjoint();
                    for (std::size_t k = 0; k < blk.outputs.size(); ++k) {
                        const long off = blk.offsets[k];
                        const auto len = static_cast<long>(dim_q(blk.outputs[k], d));
                        const Mat B = X.block(off, off, len, len);
                        // Off-block mass in this block's rows.
                        const double row_mass = X.middleRows(off, len).squaredNorm() - B.squaredNorm();
                        CHECK(row_mass < 1e-20);
                        CHECK(std::abs(B.trace() - test::weyl_character(blk.outputs[k], U)) < 1e-10);
                        CHECK(max_abs(B - rep_matrix_q(blk.outputs[k], U, d, n + 1).matrix) < 1e-10);
                    }
                }
            }
        }
    }
}

TEST_CASE("cg_apply agrees with the dense block") {
    const Partition lam{2, 1};
    const int d = 3;
    const CGBlock blk = cg_block(lam, d);
    const auto gz = enumerate_gz(lam, d);
    for (std::size_t qi = 0; qi < gz.size(); ++qi) {
        for (int i = 1; i <= d; ++i) {
            const auto col = static_cast<long>(qi) * d + (i - 1);
            Vec v = Vec::Zero(blk.op.matrix.rows());
            for (const auto &t : cg_apply(gz[qi], i, d)) {
                std::size_t k = 0;
                while (blk.output_j[k] != t.j) {
                    ++k;
                }
                const GZTable table(blk.outputs[k], d);
                v(blk.offsets[k] + table.index_of(t.out)) += t.coef;
            }
            CHECK(max_abs(v - blk.op.matrix.col(col)) < 1e-14);
        }
    }
}
