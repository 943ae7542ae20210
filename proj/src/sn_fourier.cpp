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
#include "schurkit/sn_fourier.hpp"

#include "schurkit/dimensions.hpp"
#include "schurkit/duality.hpp"
#include "schurkit/schur_transform.hpp"
#include "schurkit/tableaux.hpp"

#include <Eigen/Sparse>

#include <algorithm>
#include <cmath>
#include <deque>
#include <stdexcept>

namespace schurkit {

namespace {

void check_n(int n, int max_n) {
    if (n < 1 || n > max_n) {
        throw std::invalid_argument("S_n Fourier transform: need 1 <= n <= " + std::to_string(max_n));
    }
}

// Layout and labels shared by both constructions.
FourierTransform empty_layout(int n) {
    FourierTransform F;
    F.n = n;
    F.lambdas = enumerate_partitions(n, n);
    std::size_t off = 0;
    for (const auto &lam : F.lambdas) {
        const int dim = static_cast<int>(dim_p(lam));
        F.dims.push_back(dim);
        F.offsets.push_back(off);
        off += static_cast<std::size_t>(dim) * dim;
        const auto paths = enumerate_yy(lam);
        for (int i = 0; i < dim; ++i) {
            for (int j = 0; j < dim; ++j) {
                F.row_labels.push_back("lambda=" + to_string(lam) + "|i=" + to_string(paths[i]) +
                                       "|j=" + to_string(paths[j]));
            }
        }
    }
    for (const auto &s : all_perms(n)) {
        F.col_labels.push_back(perm_to_string(s));
    }
    F.U = Mat::Zero(static_cast<long>(off), static_cast<long>(off));
    F.phases = Vec::Ones(static_cast<long>(off));
    return F;
}

// yy_matrix for every permutation, in all_perms order.
std::vector<RMat> yy_table(const Partition &lambda, const std::vector<Perm> &perms) {
    std::vector<RMat> out;
    out.reserve(perms.size());
    for (const auto &s : perms) {
        out.push_back(yy_matrix(lambda, s));
    }
    return out;
}

Mat regular(const std::vector<Perm> &perms, const Perm &s1, const Perm &s2inv) {
    const long N = static_cast<long>(perms.size());
    Mat P = Mat::Zero(N, N);
    for (long h = 0; h < N; ++h) {
        P(static_cast<long>(perm_rank(compose(compose(s1, perms[h]), s2inv))), h) = 1.0;
    }
    return P;
}

} // namespace

std::size_t FourierTransform::row(int li, int i, int j) const {
    return offsets.at(li) + static_cast<std::size_t>(i) * dims.at(li) + j;
}

int FourierTransform::lambda_index(const Partition &lambda) const {
    const auto lam = canonical(lambda);
    for (std::size_t k = 0; k < lambdas.size(); ++k) {
        if (lambdas[k] == lam) {
            return static_cast<int>(k);
        }
    }
    return -1;
}

Mat FourierTransform::aligned() const {
    return phases.conjugate().asDiagonal() * U;
}

FourierTransform sn_qft_explicit(int n) {
    check_n(n, 6);
    FourierTransform F = empty_layout(n);
    const auto perms = all_perms(n);
    const double nfact = static_cast<double>(factorial(n));
    for (std::size_t li = 0; li < F.lambdas.size(); ++li) {
        const int dim = F.dims[li];
        const double scale = std::sqrt(dim / nfact);
        const auto table = yy_table(F.lambdas[li], perms);
        for (std::size_t g = 0; g < perms.size(); ++g) {
            for (int i = 0; i < dim; ++i) {
                for (int j = 0; j < dim; ++j) {
                    F.U(static_cast<long>(F.row(static_cast<int>(li), i, j)), static_cast<long>(g)) =
                        scale * table[g](i, j);
                }
            }
        }
    }
    return F;
}

FourierTransform sn_qft_from_schur(int n) {
    check_n(n, 5);
    FourierTransform F = empty_layout(n);
    const auto perms = all_perms(n);
    const auto st = schur_unitary(n, n);
    const auto &codec = st->codec;
    const Eigen::SparseMatrix<double, Eigen::ColMajor> cols = st->U;
    for (std::size_t g = 0; g < perms.size(); ++g) {
        const auto idx = static_cast<long>(from_digits(perms[g], n));
        for (Eigen::SparseMatrix<double, Eigen::ColMajor>::InnerIterator it(cols, idx); it; ++it) {
            const SchurLabel lab = codec.decode(static_cast<std::size_t>(it.row()));
            const GZPattern &q = codec.gz(lab.lambda).at(lab.q);
            const int li = F.lambda_index(codec.lambda(lab.lambda));
            const int i = yy_index(YYPath{q.chain}) - 1;
            F.U(static_cast<long>(F.row(li, i, lab.p)), static_cast<long>(g)) = it.value();
        }
    }
    // Fit D block by block: U L(t) U^dag has left factor D p(t) D^dag.
    for (std::size_t li = 0; li < F.lambdas.size(); ++li) {
        const int dim = F.dims[li];
        std::vector<cplx> D(dim, cplx(0.0));
        D[0] = 1.0;
        std::vector<bool> seen(dim, false);
        seen[0] = true;
        std::vector<Mat> M;
        std::vector<RMat> Y;
        for (int k = 0; k + 1 < n; ++k) {
            const Perm t = transposition(n, k, k + 1);
            const Mat G = F.U * regular(perms, t, identity_perm(n)) * F.U.adjoint();
            Mat left(dim, dim);
            for (int a = 0; a < dim; ++a) {
                for (int b = 0; b < dim; ++b) {
                    left(a, b) = G(static_cast<long>(F.row(static_cast<int>(li), a, 0)),
                                   static_cast<long>(F.row(static_cast<int>(li), b, 0)));
                }
            }
            M.push_back(left);
            Y.push_back(yy_matrix(F.lambdas[li], t));
        }
        std::deque<int> queue{0};
        while (!queue.empty()) {
            const int a = queue.front();
            queue.pop_front();
            for (std::size_t k = 0; k < M.size(); ++k) {
                for (int b = 0; b < dim; ++b) {
                    if (seen[b] || std::abs(Y[k](a, b)) < 1e-9) {
                        continue;
                    }
                    // M(a,b) = D_a Y(a,b) conj(D_b).
                    const cplx v = std::conj(M[k](a, b) / (D[a] * Y[k](a, b)));
                    D[b] = v / std::abs(v);
                    seen[b] = true;
                    queue.push_back(b);
                }
            }
        }
        for (int a = 0; a < dim; ++a) {
            for (int b = 0; b < dim; ++b) {
                F.phases(static_cast<long>(F.row(static_cast<int>(li), a, b))) = seen[a] ? D[a] : cplx(1.0);
            }
        }
    }
    return F;
}

Mat left_regular(const Perm &g) {
    return regular(all_perms(static_cast<int>(g.size())), g, identity_perm(static_cast<int>(g.size())));
}

Mat right_regular(const Perm &g) {
    const int n = static_cast<int>(g.size());
    return regular(all_perms(n), identity_perm(n), inverse(g));
}

FourierReport verify_fourier(const FourierTransform &F, int trials, std::uint64_t seed, double tol) {
    const int n = F.n;
    const auto perms = all_perms(n);
    const long N = static_cast<long>(perms.size());
    FourierReport rep;
    rep.n = n;
    rep.phases = F.phases;
    rep.unitarity = max_abs(F.U * F.U.adjoint() - Mat::Identity(N, N));
    for (int dim : F.dims) {
        rep.block_dims.push_back(dim);
    }
    std::vector<std::vector<RMat>> tables;
    for (const auto &lam : F.lambdas) {
        tables.push_back(yy_table(lam, perms));
    }
    std::vector<int> owner(N);
    for (std::size_t li = 0; li < F.lambdas.size(); ++li) {
        for (int r = 0; r < F.dims[li] * F.dims[li]; ++r) {
            owner[F.offsets[li] + r] = static_cast<int>(li);
        }
    }
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    if (trials <= 0) {
        for (long a = 0; a < N; ++a) {
            for (long b = 0; b < N; ++b) {
                pairs.emplace_back(a, b);
            }
        }
    } else {
        std::mt19937_64 rng(seed);
        std::uniform_int_distribution<long> pick(0, N - 1);
        for (int t = 0; t < trials; ++t) {
            const long a = pick(rng);
            const long b = pick(rng);
            pairs.emplace_back(a, b);
        }
    }
    const Mat UA = F.aligned();
    for (const auto &[a, b] : pairs) {
        FourierCheck chk;
        chk.s1 = perms[a];
        chk.s2 = perms[b];
        const Mat P = regular(perms, chk.s1, inverse(chk.s2));
        const Mat G = F.U * P * F.U.adjoint();
        const Mat GA = UA * P * UA.adjoint();
        for (long c = 0; c < N; ++c) {
            for (long r = 0; r < N; ++r) {
                if (owner[r] != owner[c]) {
                    chk.leakage = std::max(chk.leakage, std::abs(G(r, c)));
                }
            }
        }
        for (std::size_t li = 0; li < F.lambdas.size(); ++li) {
            const auto off = static_cast<long>(F.offsets[li]);
            const long len = static_cast<long>(F.dims[li]) * F.dims[li];
            const RMat &y1 = tables[li][a];
            const RMat &y2 = tables[li][b];
            Mat expected(len, len);
            for (long i = 0; i < y1.rows(); ++i) {
                for (long k = 0; k < y1.cols(); ++k) {
                    expected.block(i * y2.rows(), k * y2.cols(), y2.rows(), y2.cols()) =
                        (y1(i, k) * y2).cast<cplx>();
                }
            }
            chk.exact_residual = std::max(chk.exact_residual, max_abs(G.block(off, off, len, len) - expected));
            chk.aligned_residual =
                std::max(chk.aligned_residual, max_abs(GA.block(off, off, len, len) - expected));
        }
        rep.max_leakage = std::max(rep.max_leakage, chk.leakage);
        rep.max_exact_residual = std::max(rep.max_exact_residual, chk.exact_residual);
        rep.max_aligned_residual = std::max(rep.max_aligned_residual, chk.aligned_residual);
        rep.checks.push_back(std::move(chk));
    }
    rep.passed = rep.unitarity < tol && rep.max_leakage < tol && rep.max_aligned_residual < tol;
    return rep;
}

namespace {

struct GpeCircuit {
    int d;
    int n;
    std::vector<Perm> perms;
    const FourierTransform *F;
    Vec anc0;
    long D;
    long N;

    GpeCircuit(int d_, int n_, const FourierTransform *F_) : d(d_), n(n_), perms(all_perms(n_)), F(F_) {
        D = static_cast<long>(checked_power(d, n, dense_cap()));
        N = static_cast<long>(perms.size());
        if (static_cast<std::size_t>(N) * D > dense_cap()) {
            throw std::length_error("gpe: n! d^n exceeds the dense cap");
        }
        if (F->n != n) {
            throw std::invalid_argument("gpe: Fourier transform has the wrong n");
        }
        Vec e = Vec::Zero(N);
        e(static_cast<long>(F->row(F->lambda_index(Partition{n}), 0, 0))) = 1.0;
        anc0 = F->U.adjoint() * e;
    }

    // K is D x N: column g holds the system state paired with |g>.
    Mat forward(const Vec &psi) const {
        Mat K(D, N);
        for (long g = 0; g < N; ++g) {
            K.col(g) = anc0(g) * apply_perm(perms[g], d, psi);
        }
        return K * F->U.transpose();
    }

    Mat backward(const Mat &Kf) const {
        Mat K = Kf * F->U.conjugate();
        for (long g = 0; g < N; ++g) {
            K.col(g) = apply_perm(inverse(perms[g]), d, Mat(K.col(g)));
        }
        return K;
    }

    Vec system_part(const Mat &K) const { return K * anc0.conjugate(); }
};

void check_state(const Vec &state, int d, int n) {
    if (static_cast<std::size_t>(state.size()) != ipow(d, n)) {
        throw std::invalid_argument("state length must be d^n");
    }
    if (std::abs(state.norm() - 1.0) > 1e-8) {
        throw std::invalid_argument("state is not normalized");
    }
}

} // namespace

GpeReport gpe_measure(const Vec &state, int d, int n, const FourierTransform *F) {
    check_state(state, d, n);
    FourierTransform own;
    if (F == nullptr) {
        own = sn_qft_explicit(n);
        F = &own;
    }
    const GpeCircuit C(d, n, F);
    const Mat K = C.forward(state);
    GpeReport rep;
    for (std::size_t li = 0; li < F->lambdas.size(); ++li) {
        GpeOutcome out;
        out.lambda = F->lambdas[li];
        const auto off = static_cast<long>(F->offsets[li]);
        const long len = static_cast<long>(F->dims[li]) * F->dims[li];
        out.prob = K.middleCols(off, len).squaredNorm();
        Vec proj = Vec::Zero(state.size());
        if (rows(out.lambda) <= d) {
            proj = central_projector_oracle(out.lambda, d, n).matrix * state;
            out.oracle_prob = proj.squaredNorm();
        }
        rep.max_marginal_error = std::max(rep.max_marginal_error, std::abs(out.prob - out.oracle_prob));
        if (out.prob > 1e-14) {
            Mat Kl = Mat::Zero(C.D, C.N);
            Kl.middleCols(off, len) = K.middleCols(off, len) / std::sqrt(out.prob);
            const Mat post = C.backward(Kl);
            const Vec sys = C.system_part(post);
            out.ancilla_fidelity = sys.squaredNorm();
            out.post_state = sys / sys.norm();
            if (out.oracle_prob > 1e-14) {
                out.state_fidelity = std::norm(proj.dot(out.post_state)) / out.oracle_prob;
            }
            rep.min_ancilla_fidelity = std::min(rep.min_ancilla_fidelity, out.ancilla_fidelity);
        }
        rep.outcomes.push_back(std::move(out));
    }
    return rep;
}

InstrumentReport gpe_instrument(const std::map<Partition, std::vector<Mat>> &ops, const Vec &state, int d,
                                int n, double norm_tol) {
    check_state(state, d, n);
    const FourierTransform F = sn_qft_explicit(n);
    for (const auto &[lam, family] : ops) {
        const int li = F.lambda_index(lam);
        if (li < 0 || box_count(lam) != n) {
            throw std::invalid_argument("gpe_instrument: " + to_string(lam) + " is not a partition of n");
        }
        const int dim = F.dims[li];
        Mat sum = Mat::Zero(dim, dim);
        for (const auto &A : family) {
            if (A.rows() != dim || A.cols() != dim) {
                throw std::invalid_argument("gpe_instrument: operator size must be dim_p");
            }
            sum += A.adjoint() * A;
        }
        if (family.empty() || max_abs(sum - Mat::Identity(dim, dim)) > norm_tol) {
            throw std::invalid_argument("gpe_instrument: sum A^dag A != I for " + to_string(lam));
        }
    }
    const GpeCircuit C(d, n, &F);
    const Mat K = C.forward(state);
    const auto st = schur_unitary(d, n);
    const auto &codec = st->codec;
    const Vec y = st->U.cast<cplx>() * state;

    InstrumentReport rep;
    for (std::size_t li = 0; li < F.lambdas.size(); ++li) {
        const Partition &lam = F.lambdas[li];
        const int dim = F.dims[li];
        std::vector<Mat> family;
        if (auto it = ops.find(lam); it != ops.end()) {
            family = it->second;
        } else {
            family.push_back(Mat::Identity(dim, dim));
        }
        const auto off = static_cast<long>(F.offsets[li]);
        const int sli = codec.lambda_index(lam);
        for (std::size_t x = 0; x < family.size(); ++x) {
            const Mat &A = family[x];
            InstrumentOutcome out;
            out.lambda = lam;
            out.x = static_cast<int>(x);
            Mat Kx = Mat::Zero(C.D, C.N);
            for (int i = 0; i < dim; ++i) {
                Kx.middleCols(off + static_cast<long>(i) * dim, dim) =
                    K.middleCols(off + static_cast<long>(i) * dim, dim) * A.transpose();
            }
            const Mat post = C.backward(Kx);
            out.state = C.system_part(post);
            const double total = post.squaredNorm();
            out.prob = total;
            out.ancilla_fidelity = total > 1e-14 ? out.state.squaredNorm() / total : 1.0;

            Vec z = Vec::Zero(y.size());
            if (sli >= 0) {
                const int Q = codec.dim_q(sli);
                for (int q = 0; q < Q; ++q) {
                    const auto r = static_cast<long>(codec.compact_index(sli, q, 0));
                    z.segment(r, dim) = A * y.segment(r, dim);
                }
            }
            const Vec direct = st->U.transpose().cast<cplx>() * z;
            out.schur_prob = direct.squaredNorm();
            out.residual = max_abs(out.state - direct);
            rep.max_residual = std::max(rep.max_residual, out.residual);
            rep.total_prob += out.prob;
            rep.outcomes.push_back(std::move(out));
        }
    }
    return rep;
}

} // namespace schurkit
