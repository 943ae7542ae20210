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
#include "schurkit/duality.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <stdexcept>

namespace schurkit {

namespace {

using SpRow = Eigen::SparseMatrix<double, Eigen::RowMajor>;

int checked_lambda(const SchurTransform &st, const Partition &lambda) {
    const int li = st.codec.lambda_index(lambda);
    if (li < 0) {
        throw std::invalid_argument("lambda " + to_string(lambda) + " is not in I_{d,n}");
    }
    return li;
}

// Columns U_Sch^dag e_r for the given compact rows.
Mat rows_as_columns(const SchurTransform &st, const std::vector<std::size_t> &rows) {
    Mat out = Mat::Zero(st.U.cols(), static_cast<long>(rows.size()));
    for (std::size_t c = 0; c < rows.size(); ++c) {
        for (SpRow::InnerIterator it(st.U, static_cast<long>(rows[c])); it; ++it) {
            out(it.col(), static_cast<long>(c)) = it.value();
        }
    }
    return out;
}

// Entries <r_a| X |c_b> where X columns are already images of rows c_b.
Mat project_rows(const SchurTransform &st, const std::vector<std::size_t> &rows, const Mat &X) {
    Mat out = Mat::Zero(static_cast<long>(rows.size()), X.cols());
    for (std::size_t a = 0; a < rows.size(); ++a) {
        for (SpRow::InnerIterator it(st.U, static_cast<long>(rows[a])); it; ++it) {
            out.row(static_cast<long>(a)) += it.value() * X.row(it.col());
        }
    }
    return out;
}

// S X for real sparse S, one contiguous column of X at a time.
Mat sparse_times(const SpRow &S, const Mat &X) {
    Mat out(S.rows(), X.cols());
    const int *outer = S.outerIndexPtr();
    const int *inner = S.innerIndexPtr();
    const double *val = S.valuePtr();
    for (long c = 0; c < X.cols(); ++c) {
        const auto *x = reinterpret_cast<const double *>(X.col(c).data());
        auto *y = reinterpret_cast<double *>(out.col(c).data());
        for (long r = 0; r < S.rows(); ++r) {
            double re = 0, im = 0;
            for (int k = outer[r]; k < outer[r + 1]; ++k) {
                re += val[k] * x[2 * inner[k]];
                im += val[k] * x[2 * inner[k] + 1];
            }
            y[2 * r] = re;
            y[2 * r + 1] = im;
        }
    }
    return out;
}

cplx sparse_row_dot(const SpRow &S, long row, const cplx *x) {
    cplx out = 0.0;
    for (SpRow::InnerIterator it(S, row); it; ++it) {
        out += it.value() * x[it.col()];
    }
    return out;
}

void check_unitary(const Mat &U, int d) {
    if (U.rows() != d || U.cols() != d) {
        throw std::invalid_argument("U must be d x d");
    }
    if (isometry_residual(U) > 1e-8) {
        throw std::invalid_argument("U is not unitary");
    }
}

} // namespace

DenseOperator rep_matrix_q(const Partition &lambda, const Mat &U, int d, int n) {
    check_unitary(U, d);
    const auto st = schur_unitary(d, n);
    const int li = checked_lambda(*st, lambda);
    std::vector<std::size_t> rows;
    DenseOperator op;
    for (int q = 0; q < st->codec.dim_q(li); ++q) {
        rows.push_back(st->codec.compact_index(li, q, 0));
        op.row_labels.push_back(to_string(st->codec.gz(li).at(q)));
    }
    op.col_labels = op.row_labels;
    const Mat X = apply_tensor_power(U, n, rows_as_columns(*st, rows));
    op.matrix = project_rows(*st, rows, X);
    return op;
}

DenseOperator rep_matrix_p(const Partition &lambda, const Perm &s, int d, int n) {
    if (static_cast<int>(s.size()) != n || !is_perm(s)) {
        throw std::invalid_argument("rep_matrix_p: s must be a permutation of n");
    }
    const auto st = schur_unitary(d, n);
    const int li = checked_lambda(*st, lambda);
    std::vector<std::size_t> rows;
    DenseOperator op;
    for (int p = 0; p < st->codec.dim_p(li); ++p) {
        rows.push_back(st->codec.compact_index(li, 0, p));
        op.row_labels.push_back(to_string(st->codec.yy(li)[p]));
    }
    op.col_labels = op.row_labels;
    const Mat X = apply_perm(s, d, rows_as_columns(*st, rows));
    op.matrix = project_rows(*st, rows, X);
    return op;
}

RMat yy_matrix(const Partition &lambda, const Perm &s) {
    const auto lam = canonical(lambda);
    const int d = std::max(1, rows(lam));
    return rep_matrix_p(lam, s, d, box_count(lam)).matrix.real();
}

IrrepBlockReport verify_block_diagonal(const Mat &U, const Perm &s, int d, int n, double tol,
                                       double residual_tol) {
    check_unitary(U, d);
    const auto st = schur_unitary(d, n);
    const auto &codec = st->codec;
    const long D = st->U.cols();
    // Z = Q(U) U_Sch^T. P(s) commutes with Q(U), so M = U_Sch P(s) Z, and
    // U_Sch Z carries q_lambda(U) on the rows (lambda, ., p = 0).
    const Mat Z = apply_tensor_power(U, n, st->dense().adjoint());
    const Mat M = sparse_times(st->U, apply_perm(s, d, Z));

    IrrepBlockReport rep;
    std::vector<int> owner(D);
    for (int li = 0; li < codec.num_lambdas(); ++li) {
        const auto off = static_cast<long>(codec.block_offset(li));
        const long len = static_cast<long>(codec.dim_q(li)) * codec.dim_p(li);
        for (long r = 0; r < len; ++r) {
            owner[off + r] = li;
        }
    }
    for (long c = 0; c < D; ++c) {
        for (long r = 0; r < D; ++r) {
            if (owner[r] != owner[c]) {
                rep.leakage = std::max(rep.leakage, std::abs(M(r, c)));
            }
        }
    }
    for (int li = 0; li < codec.num_lambdas(); ++li) {
        IrrepBlock blk;
        blk.lambda = codec.lambda(li);
        const auto off = static_cast<long>(codec.block_offset(li));
        const long len = static_cast<long>(codec.dim_q(li)) * codec.dim_p(li);
        blk.block = M.block(off, off, len, len);
        const int Q = codec.dim_q(li);
        Mat q(Q, Q);
        for (int a = 0; a < Q; ++a) {
            for (int b = 0; b < Q; ++b) {
                q(a, b) = sparse_row_dot(st->U, static_cast<long>(codec.compact_index(li, a, 0)),
                                         Z.col(static_cast<long>(codec.compact_index(li, b, 0))).data());
            }
        }
        const Mat p = rep_matrix_p(blk.lambda, s, d, n).matrix;
        Mat expected(len, len);
        for (long a = 0; a < q.rows(); ++a) {
            for (long b = 0; b < q.cols(); ++b) {
                expected.block(a * p.rows(), b * p.cols(), p.rows(), p.cols()) = q(a, b) * p;
            }
        }
        blk.residual = max_abs(blk.block - expected);
        rep.max_residual = std::max(rep.max_residual, blk.residual);
        rep.blocks.push_back(std::move(blk));
    }
    rep.passed = rep.leakage < tol && rep.max_residual < residual_tol;
    return rep;
}

std::vector<RhoBlock> rho_blocks(const Mat &rho, int n, double tol) {
    const int d = static_cast<int>(rho.rows());
    if (rho.cols() != d || d < 1) {
        throw std::invalid_argument("rho_blocks: rho must be square");
    }
    if (max_abs(rho - rho.adjoint()) > tol || std::abs(rho.trace() - cplx(1.0)) > tol) {
        throw std::invalid_argument("rho_blocks: rho must be Hermitian with unit trace");
    }
    Eigen::SelfAdjointEigenSolver<Mat> es(rho);
    if (es.eigenvalues().minCoeff() < -tol) {
        throw std::invalid_argument("rho_blocks: rho is not positive semidefinite");
    }
    const auto st = schur_unitary(d, n);
    const auto &codec = st->codec;
    std::vector<RhoBlock> out;
    for (int li = 0; li < codec.num_lambdas(); ++li) {
        const int Q = codec.dim_q(li);
        const int P = codec.dim_p(li);
        std::vector<std::size_t> rows;
        for (int r = 0; r < Q * P; ++r) {
            rows.push_back(codec.block_offset(li) + r);
        }
        const Mat X = apply_tensor_power(rho, n, rows_as_columns(*st, rows));
        const Mat B = project_rows(*st, rows, X);
        RhoBlock rb;
        rb.lambda = codec.lambda(li);
        rb.q_block = Mat::Zero(Q, Q);
        for (int a = 0; a < Q; ++a) {
            for (int b = 0; b < Q; ++b) {
                rb.q_block(a, b) = B(a * P, b * P);
            }
        }
        Mat ptr = Mat::Zero(P, P);
        for (int a = 0; a < Q; ++a) {
            ptr += B.block(a * P, a * P, P, P);
        }
        rb.weight = ptr.trace().real();
        rb.p_state = rb.weight > 0 ? Mat(ptr / rb.weight) : Mat::Zero(P, P);
        Mat expected = Mat::Zero(Q * P, Q * P);
        for (int a = 0; a < Q; ++a) {
            for (int b = 0; b < Q; ++b) {
                expected.block(a * P, b * P, P, P) = rb.q_block(a, b) * Mat::Identity(P, P);
            }
        }
        rb.factor_residual = max_abs(B - expected);
        out.push_back(std::move(rb));
    }
    return out;
}

} // namespace schurkit
