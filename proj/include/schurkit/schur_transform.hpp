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
 * The Schur transform on (C^d)^{(x)n}, built by cascading CG transforms.
 */
#pragma once

#include "schurkit/dense.hpp"
#include "schurkit/tableaux.hpp"

#include <Eigen/Sparse>

#include <memory>
#include <string>
#include <vector>

namespace schurkit {

/// (lambda, q, p) with lambda as an index into the codec's partition list; q and p 0-based.
struct SchurLabel {
    int lambda;
    int q;
    int p;
};

/**
 * Ordering and packing of Schur labels.
 *
 * Order: lambda in enumerate_partitions order, then q in enumerate_gz
 * order, then p in yy_index order. The compact index runs over [0, d^n);
 * the padded index is (lambda * qmax + q) * pmax + p.
 */
class SchurLabelCodec {
  public:
    SchurLabelCodec(int d, int n);

    int d() const { return d_; }
    int n() const { return n_; }
    int num_lambdas() const { return static_cast<int>(lambdas_.size()); }
    const Partition &lambda(int li) const { return lambdas_.at(li); }
    const std::vector<Partition> &lambdas() const { return lambdas_; }
    /// -1 if lambda is not in I_{d,n}.
    int lambda_index(const Partition &lambda) const;
    int dim_q(int li) const { return dimq_.at(li); }
    int dim_p(int li) const { return dimp_.at(li); }
    const GZTable &gz(int li) const { return gz_.at(li); }
    const std::vector<YYPath> &yy(int li) const { return yy_.at(li); }

    std::size_t compact_size() const { return total_; }
    std::size_t block_offset(int li) const { return offset_.at(li); }
    std::size_t compact_index(int li, int q, int p) const;
    SchurLabel decode(std::size_t compact) const;

    int qmax() const { return qmax_; }
    int pmax() const { return pmax_; }
    std::size_t padded_size() const;
    std::size_t padded_index(int li, int q, int p) const;

    /// "lambda=2,1|q=<gz>|p=<yy>" with the to_string forms of each part.
    std::string label(std::size_t compact) const;

  private:
    int d_;
    int n_;
    std::vector<Partition> lambdas_;
    std::vector<GZTable> gz_;
    std::vector<std::vector<YYPath>> yy_;
    std::vector<int> dimq_;
    std::vector<int> dimp_;
    std::vector<std::size_t> offset_;
    std::size_t total_ = 0;
    int qmax_ = 0;
    int pmax_ = 0;
};

/// Real orthogonal U_Sch stored sparsely with rows in compact label order.
struct SchurTransform {
    SchurLabelCodec codec;
    Eigen::SparseMatrix<double, Eigen::RowMajor> U;

    Mat dense() const;
    /// Isometry from C^{d^n} into the padded label register, with labels.
    DenseOperator padded_operator() const;
    /// U restricted to the rows of one lambda block, as a dense real matrix.
    RMat block_rows(int li) const;
};

/**
 * Builds U_Sch by applying the CG transform qudit by qudit. The record of
 * which rows received boxes is converted to a YY path and ranked with
 * yy_index. Results are cached per (d, n). Throws std::length_error when
 * d^n exceeds dense_cap().
 */
std::shared_ptr<const SchurTransform> schur_unitary(int d, int n);

enum class Granularity { lambda, lambda_q, full };

struct SchurOutcome {
    Partition lambda;
    int q = -1; ///< -1 when aggregated
    int p = -1; ///< -1 when aggregated
    double prob = 0.0;
};

/// Probabilities of Schur-basis labels for a normalized state.
std::vector<SchurOutcome> measure_schur(const Vec &state, int d, int n, Granularity g,
                                        double norm_tol = 1e-8);

/**
 * Pi_lambda = dim_p(lambda)/n! sum_s chi_lambda(s) P(s), with characters from
 * the Murnaghan-Nakayama rule. Independent of the CG code.
 */
DenseOperator central_projector_oracle(const Partition &lambda, int d, int n);

/// U_Sch^dag (|lambda><lambda| (x) I (x) I) U_Sch.
Mat schur_projector(const Partition &lambda, int d, int n);

/// sum_p c_p U_Sch^dag |lambda, q, p>.
Vec dfs_encode(const Partition &lambda, const GZPattern &q, const Vec &p_state, int d, int n);
/// Coefficients <lambda, q, p| U_Sch |state>.
Vec dfs_decode(const Vec &state, const Partition &lambda, const GZPattern &q, int d, int n);

} // namespace schurkit
