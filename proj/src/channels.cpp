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
#include "schurkit/channels.hpp"

#include "schurkit/characters.hpp"
#include "schurkit/dimensions.hpp"
#include "schurkit/duality.hpp"
#include "schurkit/schur_transform.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>
#include <tuple>

namespace schurkit {

namespace {

int common_size(const Partition &a, const Partition &b, const Partition &c) {
    const int n = box_count(a);
    if (box_count(b) != n || box_count(c) != n) {
        throw std::invalid_argument("partitions must have the same size");
    }
    return n;
}

RMat kron3(const RMat &A, const RMat &B, const RMat &C) {
    const long nb = B.rows() * C.rows();
    RMat BC(nb, nb);
    for (long i = 0; i < B.rows(); ++i) {
        for (long j = 0; j < B.cols(); ++j) {
            BC.block(i * C.rows(), j * C.cols(), C.rows(), C.cols()) = B(i, j) * C;
        }
    }
    RMat out(A.rows() * nb, A.cols() * nb);
    for (long i = 0; i < A.rows(); ++i) {
        for (long j = 0; j < A.cols(); ++j) {
            out.block(i * nb, j * nb, nb, nb) = A(i, j) * BC;
        }
    }
    return out;
}

// Same as central_projector_oracle, but also covering d = 1.
RMat projector(const Partition &lambda, int d, int n) {
    if (d == 1) {
        return RMat::Constant(1, 1, lambda == Partition{n} ? 1.0 : 0.0);
    }
    return central_projector_oracle(lambda, d, n).matrix.real();
}

} // namespace

std::uint64_t kronecker(const Partition &a, const Partition &b, const Partition &c) {
    const int n = common_size(a, b, c);
    if (n > 12) {
        throw std::invalid_argument("kronecker: n too large");
    }
    __int128 total = 0;
    for (const auto &mu : enumerate_partitions(n, n)) {
        total += static_cast<__int128>(class_size(mu)) * mn_character(a, mu) * mn_character(b, mu) *
                 mn_character(c, mu);
    }
    const auto nf = static_cast<__int128>(factorial(n));
    if (total < 0 || total % nf != 0) {
        throw std::logic_error("kronecker: character sum is not a nonnegative multiple of n!");
    }
    return static_cast<std::uint64_t>(total / nf);
}

Vec phi_lambda(const Partition &lambda) {
    const auto dim = static_cast<long>(dim_p(canonical(lambda)));
    Vec v = Vec::Zero(dim * dim);
    for (long p = 0; p < dim; ++p) {
        v(p * dim + p) = 1.0 / std::sqrt(static_cast<double>(dim));
    }
    return v;
}

std::vector<Vec> invariant_basis(const Partition &a, const Partition &b, const Partition &c) {
    const int n = common_size(a, b, c);
    if (n > 5) {
        throw std::invalid_argument("invariant_basis: n must be at most 5");
    }
    const auto perms = all_perms(n);
    const long dim = static_cast<long>(dim_p(a) * dim_p(b) * dim_p(c));
    RMat avg = RMat::Zero(dim, dim);
    for (const auto &s : perms) {
        avg += kron3(yy_matrix(a, s), yy_matrix(b, s), yy_matrix(c, s));
    }
    avg /= static_cast<double>(perms.size());
    Eigen::SelfAdjointEigenSolver<RMat> es(avg);
    const long rank = (es.eigenvalues().array() > 0.5).count();
    std::vector<Eigen::VectorXd> basis;
    for (long k = 0; k < dim && static_cast<long>(basis.size()) < rank; ++k) {
        Eigen::VectorXd v = avg.col(k);
        for (const auto &u : basis) {
            v -= u.dot(v) * u;
        }
        for (const auto &u : basis) {
            v -= u.dot(v) * u;
        }
        const double nv = v.norm();
        if (nv < 1e-6) {
            continue;
        }
        v /= nv;
        for (long i = 0; i < dim; ++i) {
            if (std::abs(v(i)) > 1e-12) {
                if (v(i) < 0) {
                    v = -v;
                }
                break;
            }
        }
        basis.push_back(v);
    }
    std::vector<Vec> out;
    for (const auto &v : basis) {
        out.push_back(v.cast<cplx>());
    }
    return out;
}

double invariance_residual(const Vec &v, const Partition &a, const Partition &b, const Partition &c) {
    const int n = common_size(a, b, c);
    double worst = 0.0;
    for (const auto &s : all_perms(n)) {
        const RMat K = kron3(yy_matrix(a, s), yy_matrix(b, s), yy_matrix(c, s));
        worst = std::max(worst, max_abs(K.cast<cplx>() * v - v));
    }
    return worst;
}

Mat dephasing_isometry(double p) {
    if (p < 0.0 || p > 1.0) {
        throw std::invalid_argument("dephasing_isometry: p must lie in [0, 1]");
    }
    Mat U = Mat::Zero(4, 2);
    U(0, 0) = std::sqrt(1.0 - p);
    U(1, 0) = std::sqrt(p);
    U(2, 1) = std::sqrt(1.0 - p);
    U(3, 1) = -std::sqrt(p);
    return U;
}

namespace {

// Rows of U_N^{(x)n} from (b1 e1)(b2 e2)... to (b1..bn)(e1..en).
std::vector<long> output_order(int d_b, int d_e, int n) {
    const int de_n = static_cast<int>(ipow(d_e, n));
    const auto total = static_cast<long>(ipow(d_b * d_e, n));
    std::vector<long> to(total);
    for (long r = 0; r < total; ++r) {
        const auto t = digits(static_cast<std::size_t>(r), d_b * d_e, n);
        std::vector<int> b(n), e(n);
        for (int k = 0; k < n; ++k) {
            b[k] = t[k] / d_e;
            e[k] = t[k] % d_e;
        }
        to[r] = static_cast<long>(from_digits(b, d_b) * de_n + from_digits(e, d_e));
    }
    return to;
}

// (S_B (x) S_E) X, or its transpose, applied column by column.
Mat conj_output(const Mat &X, const Mat &SB, const Mat &SE, bool transpose) {
    const long DB = SB.rows();
    const long DE = SE.rows();
    Mat out(X.rows(), X.cols());
    for (long c = 0; c < X.cols(); ++c) {
        Mat Z(DB, DE);
        for (long b = 0; b < DB; ++b) {
            for (long e = 0; e < DE; ++e) {
                Z(b, e) = X(b * DE + e, c);
            }
        }
        const Mat Y = transpose ? Mat(SB.transpose() * Z * SE) : Mat(SB * Z * SE.transpose());
        for (long b = 0; b < DB; ++b) {
            for (long e = 0; e < DE; ++e) {
                out(b * DE + e, c) = Y(b, e);
            }
        }
    }
    return out;
}

} // namespace

NormalFormReport channel_normal_form(const Mat &U_N, int d_a, int d_b, int d_e, int n) {
    if (U_N.rows() != static_cast<long>(d_b) * d_e || U_N.cols() != d_a) {
        throw std::invalid_argument("channel_normal_form: U_N must be (d_b d_e) x d_a");
    }
    if (isometry_residual(U_N) > 1e-8) {
        throw std::invalid_argument("channel_normal_form: U_N is not an isometry");
    }
    if (n < 1 || n > 4) {
        throw std::invalid_argument("channel_normal_form: need 1 <= n <= 4");
    }
    NormalFormReport rep;
    rep.n = n;
    rep.d_a = d_a;
    rep.d_b = d_b;
    rep.d_e = d_e;

    const Mat T = tensor_power(U_N, n);
    const auto order = output_order(d_b, d_e, n);
    Mat M0 = Mat::Zero(T.rows(), T.cols());
    for (long r = 0; r < T.rows(); ++r) {
        M0.row(order[r]) = T.row(r);
    }
    const auto sa = schur_unitary(d_a, n);
    const auto sb = schur_unitary(d_b, n);
    const auto se = schur_unitary(d_e, n);
    const Mat SA = sa->dense();
    const Mat SB = sb->dense();
    const Mat SE = se->dense();
    const Mat M = conj_output(M0 * SA.transpose(), SB, SE, false);
    const long DE = SE.rows();

    const auto &cA = sa->codec;
    const auto &cB = sb->codec;
    const auto &cE = se->codec;
    using Key = std::tuple<int, int, int, int, int>;
    std::map<std::pair<int, int>, std::map<Key, cplx>> table;
    Mat rebuilt = Mat::Zero(M.rows(), M.cols());

    for (int la = 0; la < cA.num_lambdas(); ++la) {
        for (int lb = 0; lb < cB.num_lambdas(); ++lb) {
            for (int le = 0; le < cE.num_lambdas(); ++le) {
                const Partition &A = cA.lambda(la);
                const Partition &B = cB.lambda(lb);
                const Partition &E = cE.lambda(le);
                const int PA = cA.dim_p(la);
                const int PB = cB.dim_p(lb);
                const int PE = cE.dim_p(le);
                const auto alphas = kronecker(A, B, E) > 0 ? invariant_basis(A, B, E) : std::vector<Vec>{};
                std::vector<Mat> W;
                for (const auto &alpha : alphas) {
                    Mat w(static_cast<long>(PB) * PE, PA);
                    for (int pa = 0; pa < PA; ++pa) {
                        for (int pb = 0; pb < PB; ++pb) {
                            for (int pe = 0; pe < PE; ++pe) {
                                w(static_cast<long>(pb) * PE + pe, pa) =
                                    std::sqrt(static_cast<double>(PA)) *
                                    alpha((static_cast<long>(pa) * PB + pb) * PE + pe);
                            }
                        }
                    }
                    W.push_back(std::move(w));
                }
                for (int qa = 0; qa < cA.dim_q(la); ++qa) {
                    for (int qb = 0; qb < cB.dim_q(lb); ++qb) {
                        for (int qe = 0; qe < cE.dim_q(le); ++qe) {
                            Mat blk(static_cast<long>(PB) * PE, PA);
                            auto rowB = [&](int pb) { return static_cast<long>(cB.compact_index(lb, qb, pb)); };
                            auto rowE = [&](int pe) { return static_cast<long>(cE.compact_index(le, qe, pe)); };
                            for (int pb = 0; pb < PB; ++pb) {
                                for (int pe = 0; pe < PE; ++pe) {
                                    for (int pa = 0; pa < PA; ++pa) {
                                        blk(static_cast<long>(pb) * PE + pe, pa) =
                                            M(rowB(pb) * DE + rowE(pe), static_cast<long>(cA.compact_index(la, qa, pa)));
                                    }
                                }
                            }
                            if (W.empty()) {
                                rep.support_violation = std::max(rep.support_violation, blk.norm());
                                rep.residual = std::max(rep.residual, max_abs(blk));
                                continue;
                            }
                            Mat recon = Mat::Zero(blk.rows(), blk.cols());
                            for (std::size_t al = 0; al < W.size(); ++al) {
                                const cplx v = (W[al].adjoint() * blk).trace() / static_cast<double>(PA);
                                recon += v * W[al];
                                table[{la, qa}][Key{lb, qb, le, qe, static_cast<int>(al)}] = v;
                                if (std::abs(v) > 1e-12) {
                                    rep.entries.push_back(NormalFormEntry{A, qa, B, qb, E, qe, static_cast<int>(al), v});
                                }
                            }
                            rep.residual = std::max(rep.residual, max_abs(blk - recon));
                            for (int pb = 0; pb < PB; ++pb) {
                                for (int pe = 0; pe < PE; ++pe) {
                                    for (int pa = 0; pa < PA; ++pa) {
                                        rebuilt(rowB(pb) * DE + rowE(pe),
                                                static_cast<long>(cA.compact_index(la, qa, pa))) =
                                            recon(static_cast<long>(pb) * PE + pe, pa);
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
    }

    const Mat back = conj_output(rebuilt, SB, SE, true) * SA;
    Mat interleaved(back.rows(), back.cols());
    for (long r = 0; r < back.rows(); ++r) {
        interleaved.row(r) = back.row(order[r]);
    }
    rep.round_trip = max_abs(interleaved - T);

    for (int la = 0; la < cA.num_lambdas(); ++la) {
        for (int q1 = 0; q1 < cA.dim_q(la); ++q1) {
            for (int q2 = 0; q2 < cA.dim_q(la); ++q2) {
                cplx s = 0.0;
                const auto &t1 = table[{la, q1}];
                const auto &t2 = table[{la, q2}];
                for (const auto &[key, v1] : t1) {
                    if (auto it = t2.find(key); it != t2.end()) {
                        s += std::conj(v1) * it->second;
                    }
                }
                rep.isometry = std::max(rep.isometry, std::abs(s - (q1 == q2 ? 1.0 : 0.0)));
            }
        }
    }
    return rep;
}

std::vector<Mat> bloch_grid() {
    const double c[] = {-1.0, -0.5, 0.0, 0.5, 1.0};
    std::vector<Mat> out;
    Mat X(2, 2), Y(2, 2), Z(2, 2);
    X << 0, 1, 1, 0;
    Y << 0, cplx(0, -1), cplx(0, 1), 0;
    Z << 1, 0, 0, -1;
    for (double x : c) {
        for (double y : c) {
            for (double z : c) {
                if (x * x + y * y + z * z > 1.0 + 1e-12) {
                    continue;
                }
                out.push_back(0.5 * (Mat::Identity(2, 2) + x * X + y * Y + z * Z));
            }
        }
    }
    return out;
}

namespace {

void check_qubit_channel(const Mat &U_N, int d_b, int d_e, int n) {
    if (U_N.cols() != 2 || U_N.rows() != static_cast<long>(d_b) * d_e) {
        throw std::invalid_argument("typical triples: U_N must map a qubit into d_b d_e");
    }
    if (isometry_residual(U_N) > 1e-8) {
        throw std::invalid_argument("typical triples: U_N is not an isometry");
    }
    if (n < 1 || n > 3) {
        throw std::invalid_argument("typical triples: need 1 <= n <= 3");
    }
}

struct Axis {
    std::vector<Partition> lambdas;
    std::vector<RMat> proj;

    Axis(int d, int n) : lambdas(enumerate_partitions(d, n)) {
        for (const auto &lam : lambdas) {
            proj.push_back(projector(lam, d, n));
        }
    }
};

std::vector<TypicalTriple> masses_with(const Mat &U_N, int d_b, int d_e, int n, const Mat &rho, const Axis &axA,
                                       const Axis &axB, const Axis &axE) {
    const int d_a = 2;
    const auto DA = static_cast<long>(ipow(d_a, n));
    const auto DB = static_cast<long>(ipow(d_b, n));
    const auto DE = static_cast<long>(ipow(d_e, n));
    const int dabe = d_a * d_b * d_e;
    Eigen::SelfAdjointEigenSolver<Mat> es(rho);
    const Eigen::VectorXd ev = es.eigenvalues().cwiseMax(0.0).cwiseSqrt();
    const Mat sq = es.eigenvectors() * ev.cast<cplx>().asDiagonal() * es.eigenvectors().adjoint();
    const Mat psi1 = (U_N * sq).transpose(); // [a, b*d_e + e]
    // psi^{(x)n} arranged as (a1..an) x (b1..bn)(e1..en).
    Mat T = Mat::Zero(DA, DB * DE);
    const auto total = static_cast<std::size_t>(ipow(dabe, n));
    std::vector<int> a(n), b(n), e(n);
    for (std::size_t idx = 0; idx < total; ++idx) {
        const auto t = digits(idx, dabe, n);
        cplx amp = 1.0;
        for (int k = 0; k < n; ++k) {
            a[k] = t[k] / (d_b * d_e);
            const int be = t[k] % (d_b * d_e);
            b[k] = be / d_e;
            e[k] = be % d_e;
            amp *= psi1(a[k], be);
        }
        T(static_cast<long>(from_digits(a, d_a)),
          static_cast<long>(from_digits(b, d_b)) * DE + static_cast<long>(from_digits(e, d_e))) = amp;
    }
    std::vector<TypicalTriple> out;
    for (std::size_t ia = 0; ia < axA.lambdas.size(); ++ia) {
        const Mat TA = axA.proj[ia].cast<cplx>() * T;
        for (std::size_t ib = 0; ib < axB.lambdas.size(); ++ib) {
            for (std::size_t ie = 0; ie < axE.lambdas.size(); ++ie) {
                double mass = 0.0;
                for (long r = 0; r < DA; ++r) {
                    Mat Z(DB, DE);
                    for (long bb = 0; bb < DB; ++bb) {
                        Z.row(bb) = TA.row(r).segment(bb * DE, DE);
                    }
                    mass += (axB.proj[ib].cast<cplx>() * Z * axE.proj[ie].transpose().cast<cplx>()).squaredNorm();
                }
                out.push_back(TypicalTriple{axA.lambdas[ia], axB.lambdas[ib], axE.lambdas[ie], mass});
            }
        }
    }
    return out;
}

} // namespace

std::vector<TypicalTriple> triple_masses(const Mat &U_N, int d_b, int d_e, int n, const Mat &rho) {
    check_qubit_channel(U_N, d_b, d_e, n);
    if (rho.rows() != 2 || rho.cols() != 2) {
        throw std::invalid_argument("triple_masses: rho must be 2 x 2");
    }
    return masses_with(U_N, d_b, d_e, n, rho, Axis(2, n), Axis(d_b, n), Axis(d_e, n));
}

std::vector<TypicalTriple> typical_triples(const Mat &U_N, int d_b, int d_e, int n, double eps) {
    check_qubit_channel(U_N, d_b, d_e, n);
    const Axis axA(2, n), axB(d_b, n), axE(d_e, n);
    std::vector<TypicalTriple> best;
    for (const Mat &rho : bloch_grid()) {
        const auto m = masses_with(U_N, d_b, d_e, n, rho, axA, axB, axE);
        if (best.empty()) {
            best = m;
        }
        for (std::size_t k = 0; k < m.size(); ++k) {
            best[k].max_mass = std::max(best[k].max_mass, m[k].max_mass);
        }
    }
    std::vector<TypicalTriple> out;
    for (const auto &t : best) {
        if (t.max_mass >= eps) {
            out.push_back(t);
        }
    }
    return out;
}

} // namespace schurkit
