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
#include "schurkit/dense.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <vector>

namespace schurkit {

std::size_t dense_cap() {
    if (const char *env = std::getenv("SCHURKIT_DENSE_CAP")) {
        try {
            const long long v = std::stoll(env);
            if (v > 0) {
                return static_cast<std::size_t>(v);
            }
        } catch (const std::exception &) {
        }
        throw std::invalid_argument("SCHURKIT_DENSE_CAP must be a positive integer");
    }
    return 4096;
}

std::size_t ipow(int d, int n) {
    std::size_t out = 1;
    for (int i = 0; i < n; ++i) {
        out *= static_cast<std::size_t>(d);
    }
    return out;
}

std::size_t checked_power(int d, int n, std::size_t cap) {
    if (d < 1 || n < 0) {
        throw std::invalid_argument("need d >= 1 and n >= 0");
    }
    std::size_t out = 1;
    for (int i = 0; i < n; ++i) {
        if (out > cap / static_cast<std::size_t>(d)) {
            throw std::length_error("d^n = " + std::to_string(d) + "^" + std::to_string(n) +
                                    " exceeds the dense cap " + std::to_string(cap));
        }
        out *= static_cast<std::size_t>(d);
    }
    if (out > cap) {
        throw std::length_error("dimension exceeds the dense cap " + std::to_string(cap));
    }
    return out;
}

std::vector<int> digits(std::size_t index, int d, int n) {
    std::vector<int> dig(n);
    for (int m = n - 1; m >= 0; --m) {
        dig[m] = static_cast<int>(index % d);
        index /= d;
    }
    return dig;
}

std::size_t from_digits(const std::vector<int> &dig, int d) {
    std::size_t out = 0;
    for (int x : dig) {
        out = out * d + x;
    }
    return out;
}

std::vector<std::string> computational_labels(int d, int n) {
    const std::size_t D = ipow(d, n);
    std::vector<std::string> out;
    out.reserve(D);
    for (std::size_t i = 0; i < D; ++i) {
        std::string s;
        for (int x : digits(i, d, n)) {
            if (!s.empty() && d > 10) {
                s += ' ';
            }
            s += std::to_string(x);
        }
        out.push_back(s);
    }
    return out;
}

std::vector<std::size_t> perm_action(const Perm &s, int d) {
    const int n = static_cast<int>(s.size());
    const std::size_t D = ipow(d, n);
    std::vector<std::size_t> out(D);
    std::vector<int> moved(n);
    for (std::size_t i = 0; i < D; ++i) {
        const auto dig = digits(i, d, n);
        for (int m = 0; m < n; ++m) {
            moved[s[m]] = dig[m];
        }
        out[i] = from_digits(moved, d);
    }
    return out;
}

Mat perm_matrix(const Perm &s, int d) {
    const auto act = perm_action(s, d);
    Mat P = Mat::Zero(static_cast<long>(act.size()), static_cast<long>(act.size()));
    for (std::size_t i = 0; i < act.size(); ++i) {
        P(static_cast<long>(act[i]), static_cast<long>(i)) = 1.0;
    }
    return P;
}

Mat apply_perm(const Perm &s, int d, const Mat &X) {
    const auto act = perm_action(s, d);
    if (static_cast<std::size_t>(X.rows()) != act.size()) {
        throw std::invalid_argument("apply_perm: dimension mismatch");
    }
    Mat out(X.rows(), X.cols());
    for (std::size_t i = 0; i < act.size(); ++i) {
        out.row(static_cast<long>(act[i])) = X.row(static_cast<long>(i));
    }
    return out;
}

namespace {

// Applies A to every tensor factor of the columns stored in cur (total
// entries). Column-major storage: for factor m the flat offset splits as
// (block, digit, inner) with inner = d^{n-1-m}; columns fold into block.
// Returns whichever of cur and next holds the result.
cplx *apply_factors(const Mat &A, const Mat &At, int n, cplx *cur, cplx *next, long total) {
    const auto d = static_cast<int>(A.rows());
    for (int m = 0; m < n; ++m) {
        const auto inner = static_cast<long>(ipow(d, n - 1 - m));
        const long span = inner * d;
        const long blocks = total / span;
        if (inner == 1) {
            Eigen::Map<Mat>(next, d, blocks).noalias() = A * Eigen::Map<const Mat>(cur, d, blocks);
        } else if (d > 8 && inner >= 16) {
            // Each block is an inner x d matrix acted on from the right by A^T.
            for (long b = 0; b < blocks; ++b) {
                Eigen::Map<Mat>(next + b * span, inner, d).noalias() =
                    Eigen::Map<const Mat>(cur + b * span, inner, d) * At;
            }
        } else {
            // Small d or short rows: plain loops on (re, im) pairs beat many tiny GEMM calls.
            const auto *x = reinterpret_cast<const double *>(cur);
            auto *y = reinterpret_cast<double *>(next);
            for (long b = 0; b < blocks; ++b) {
                const long base = 2 * b * span;
                for (int a = 0; a < d; ++a) {
                    double *ya = y + base + 2 * a * inner;
                    std::fill(ya, ya + 2 * inner, 0.0);
                    for (int k = 0; k < d; ++k) {
                        const double cr = A(a, k).real();
                        const double ci = A(a, k).imag();
                        const double *xk = x + base + 2 * k * inner;
                        for (long in = 0; in < inner; ++in) {
                            const double xr = xk[2 * in];
                            const double xi = xk[2 * in + 1];
                            ya[2 * in] += cr * xr - ci * xi;
                            ya[2 * in + 1] += cr * xi + ci * xr;
                        }
                    }
                }
            }
        }
        std::swap(cur, next);
    }
    return cur;
}

} // namespace

Mat apply_tensor_power(const Mat &A, int n, const Mat &X) {
    const int d = static_cast<int>(A.rows());
    if (A.cols() != A.rows()) {
        throw std::invalid_argument("apply_tensor_power: A must be square");
    }
    const std::size_t D = ipow(d, n);
    if (static_cast<std::size_t>(X.rows()) != D) {
        throw std::invalid_argument("apply_tensor_power: dimension mismatch");
    }
    const Mat At = A.transpose();
    // Columns are independent; pushing a cache-sized chunk through all n
    // factors avoids n full passes over memory.
    const long rows = X.rows();
    const long chunk = std::max<long>(1, 16384 / std::max<long>(1, rows));
    Mat out(X.rows(), X.cols());
    std::vector<cplx> a(static_cast<std::size_t>(rows * chunk)), b(a.size());
    for (long c0 = 0; c0 < X.cols(); c0 += chunk) {
        const long cols = std::min(chunk, X.cols() - c0);
        const long total = rows * cols;
        std::copy(X.data() + c0 * rows, X.data() + c0 * rows + total, a.data());
        const cplx *res = apply_factors(A, At, n, a.data(), b.data(), total);
        std::copy(res, res + total, out.data() + c0 * rows);
    }
    return out;
}

Mat tensor_power(const Mat &A, int n) {
    Mat out = Mat::Identity(1, 1);
    for (int i = 0; i < n; ++i) {
        Mat next(out.rows() * A.rows(), out.cols() * A.cols());
        for (long r = 0; r < out.rows(); ++r) {
            for (long c = 0; c < out.cols(); ++c) {
                next.block(r * A.rows(), c * A.cols(), A.rows(), A.cols()) = out(r, c) * A;
            }
        }
        out = std::move(next);
    }
    return out;
}

Mat haar_unitary(int d, std::mt19937_64 &rng) {
    std::normal_distribution<double> g(0.0, 1.0);
    Mat Z(d, d);
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) {
            Z(i, j) = cplx(g(rng), g(rng));
        }
    }
    Eigen::HouseholderQR<Mat> qr(Z);
    Mat Q = qr.householderQ();
    Mat R = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int j = 0; j < d; ++j) {
        const cplx r = R(j, j);
        const double a = std::abs(r);
        Q.col(j) *= a > 0 ? r / a : cplx(1.0);
    }
    return Q;
}

Vec random_state(std::size_t dim, std::mt19937_64 &rng) {
    std::normal_distribution<double> g(0.0, 1.0);
    Vec v(static_cast<long>(dim));
    for (auto &x : v) {
        x = cplx(g(rng), g(rng));
    }
    return v / v.norm();
}

double max_abs(const Mat &A) { return A.size() == 0 ? 0.0 : A.cwiseAbs().maxCoeff(); }

double isometry_residual(const Mat &A) {
    return max_abs(A.adjoint() * A - Mat::Identity(A.cols(), A.cols()));
}

} // namespace schurkit
