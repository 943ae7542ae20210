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
#include "schurkit/schur_transform.hpp"

#include "schurkit/characters.hpp"
#include "schurkit/dimensions.hpp"
#include "schurkit/wigner.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>

namespace schurkit {

SchurLabelCodec::SchurLabelCodec(int d, int n) : d_(d), n_(n) {
    if (d < 1 || n < 1) {
        throw std::invalid_argument("SchurLabelCodec needs d >= 1 and n >= 1");
    }
    lambdas_ = enumerate_partitions(d, n);
    for (const auto &lam : lambdas_) {
        gz_.emplace_back(lam, d);
        yy_.push_back(enumerate_yy(lam));
        dimq_.push_back(gz_.back().size());
        dimp_.push_back(static_cast<int>(yy_.back().size()));
        offset_.push_back(total_);
        total_ += static_cast<std::size_t>(dimq_.back()) * dimp_.back();
        qmax_ = std::max(qmax_, dimq_.back());
        pmax_ = std::max(pmax_, dimp_.back());
    }
}

int SchurLabelCodec::lambda_index(const Partition &lambda) const {
    const auto lam = canonical(lambda);
    for (int i = 0; i < num_lambdas(); ++i) {
        if (lambdas_[i] == lam) {
            return i;
        }
    }
    return -1;
}

std::size_t SchurLabelCodec::compact_index(int li, int q, int p) const {
    if (li < 0 || li >= num_lambdas() || q < 0 || q >= dimq_[li] || p < 0 || p >= dimp_[li]) {
        throw std::out_of_range("SchurLabelCodec: label out of range");
    }
    return offset_[li] + static_cast<std::size_t>(q) * dimp_[li] + p;
}

SchurLabel SchurLabelCodec::decode(std::size_t compact) const {
    if (compact >= total_) {
        throw std::out_of_range("SchurLabelCodec: index out of range");
    }
    int li = num_lambdas() - 1;
    while (offset_[li] > compact) {
        --li;
    }
    const std::size_t rel = compact - offset_[li];
    return SchurLabel{li, static_cast<int>(rel / dimp_[li]), static_cast<int>(rel % dimp_[li])};
}

std::size_t SchurLabelCodec::padded_size() const {
    return static_cast<std::size_t>(num_lambdas()) * qmax_ * pmax_;
}

std::size_t SchurLabelCodec::padded_index(int li, int q, int p) const {
    compact_index(li, q, p);
    return (static_cast<std::size_t>(li) * qmax_ + q) * pmax_ + p;
}

std::string SchurLabelCodec::label(std::size_t compact) const {
    const auto l = decode(compact);
    return "lambda=" + to_string(lambdas_[l.lambda]) + "|q=" + to_string(gz_[l.lambda].at(l.q)) +
           "|p=" + to_string(yy_[l.lambda][l.p]);
}

Mat SchurTransform::dense() const { return Mat(U.cast<cplx>()); }

DenseOperator SchurTransform::padded_operator() const {
    DenseOperator op;
    const std::size_t rows = codec.padded_size();
    const auto D = static_cast<long>(U.cols());
    op.matrix = Mat::Zero(static_cast<long>(rows), D);
    op.row_labels.assign(rows, "pad");
    for (std::size_t r = 0; r < codec.compact_size(); ++r) {
        const auto l = codec.decode(r);
        const auto pr = static_cast<long>(codec.padded_index(l.lambda, l.q, l.p));
        op.row_labels[pr] = codec.label(r);
        for (Eigen::SparseMatrix<double, Eigen::RowMajor>::InnerIterator it(U, static_cast<long>(r)); it;
             ++it) {
            op.matrix(pr, it.col()) = it.value();
        }
    }
    op.col_labels = computational_labels(codec.d(), codec.n());
    return op;
}

RMat SchurTransform::block_rows(int li) const {
    const auto off = static_cast<long>(codec.block_offset(li));
    const long len = static_cast<long>(codec.dim_q(li)) * codec.dim_p(li);
    RMat out = RMat::Zero(len, U.cols());
    for (long r = 0; r < len; ++r) {
        for (Eigen::SparseMatrix<double, Eigen::RowMajor>::InnerIterator it(U, off + r); it; ++it) {
            out(r, it.col()) = it.value();
        }
    }
    return out;
}

namespace {

struct Step {
    int lam;
    int q;
    double c;
};

struct Term {
    int path;
    int q;
    double c;
};

// Interned partitions, GZ tables, CG steps and partial YY paths for one build.
class Cascade {
  public:
    Cascade(int d, int n, const SchurLabelCodec &codec) : d_(d), n_(n), codec_(codec) {}

    std::shared_ptr<SchurTransform> build() {
        const std::size_t D = ipow(d_, n_);
        triplets_.reserve(D * 4);
        const int lam1 = part_id(Partition{1});
        const int path1 = extend_path(-1, lam1);
        for (int i = 0; i < d_; ++i) {
            const int q = table(lam1).index_of(defining_pattern(i + 1, d_));
            std::vector<Term> state{Term{path1, q, 1.0}};
            dfs(1, static_cast<std::size_t>(i), state);
        }
        auto out = std::make_shared<SchurTransform>(SchurTransform{codec_, {}});
        out->U.resize(static_cast<long>(codec_.compact_size()), static_cast<long>(D));
        out->U.setFromTriplets(triplets_.begin(), triplets_.end());
        out->U.makeCompressed();
        return out;
    }

  private:
    int part_id(const Partition &p) {
        auto it = part_ids_.find(p);
        if (it != part_ids_.end()) {
            return it->second;
        }
        const int id = static_cast<int>(parts_.size());
        parts_.push_back(p);
        tables_.push_back(std::make_unique<GZTable>(p, d_));
        part_ids_.emplace(p, id);
        return id;
    }

    const GZTable &table(int id) const { return *tables_[id]; }

    int extend_path(int path, int lam) {
        auto key = std::make_pair(path, lam);
        auto it = path_ext_.find(key);
        if (it != path_ext_.end()) {
            return it->second;
        }
        const int id = static_cast<int>(path_parent_.size());
        path_parent_.push_back(path);
        path_top_.push_back(lam);
        path_ext_.emplace(key, id);
        return id;
    }

    const std::vector<Step> &step(int lam, int q, int i) {
        auto key = std::make_tuple(lam, q, i);
        auto it = steps_.find(key);
        if (it != steps_.end()) {
            return it->second;
        }
        std::vector<Step> out;
        for (const auto &t : cg_apply(table(lam).at(q), i + 1, d_)) {
            const int lp = part_id(t.out.top());
            const int qi = table(lp).index_of(t.out);
            out.push_back(Step{lp, qi, t.coef});
        }
        return steps_.emplace(key, std::move(out)).first->second;
    }

    int path_row_p(int path) {
        auto it = path_p_.find(path);
        if (it != path_p_.end()) {
            return it->second;
        }
        std::vector<Partition> chain;
        for (int p = path; p >= 0; p = path_parent_[p]) {
            chain.push_back(parts_[path_top_[p]]);
        }
        std::reverse(chain.begin(), chain.end());
        const int p = yy_index(YYPath{chain}) - 1;
        path_p_.emplace(path, p);
        return p;
    }

    void dfs(int k, std::size_t prefix, const std::vector<Term> &state) {
        if (k == n_) {
            for (const auto &t : state) {
                const int lam = path_top_[t.path];
                const int li = codec_.lambda_index(parts_[lam]);
                const auto row = codec_.compact_index(li, t.q, path_row_p(t.path));
                triplets_.emplace_back(static_cast<long>(row), static_cast<long>(prefix), t.c);
            }
            return;
        }
        std::vector<Term> next;
        for (int i = 0; i < d_; ++i) {
            next.clear();
            for (const auto &t : state) {
                const int lam = path_top_[t.path];
                for (const auto &s : step(lam, t.q, i)) {
                    next.push_back(Term{extend_path(t.path, s.lam), s.q, t.c * s.c});
                }
            }
            std::sort(next.begin(), next.end(), [](const Term &a, const Term &b) {
                return std::tie(a.path, a.q) < std::tie(b.path, b.q);
            });
            std::vector<Term> merged;
            for (const auto &t : next) {
                if (!merged.empty() && merged.back().path == t.path && merged.back().q == t.q) {
                    merged.back().c += t.c;
                } else {
                    merged.push_back(t);
                }
            }
            std::erase_if(merged, [](const Term &t) { return std::abs(t.c) < 1e-15; });
            dfs(k + 1, prefix * d_ + i, merged);
        }
    }

    int d_;
    int n_;
    const SchurLabelCodec &codec_;
    std::vector<Partition> parts_;
    std::map<Partition, int> part_ids_;
    std::vector<std::unique_ptr<GZTable>> tables_;
    std::vector<int> path_parent_;
    std::vector<int> path_top_;
    std::map<std::pair<int, int>, int> path_ext_;
    std::map<int, int> path_p_;
    std::map<std::tuple<int, int, int>, std::vector<Step>> steps_;
    std::vector<Eigen::Triplet<double>> triplets_;
};

std::mutex cache_mutex;
std::map<std::pair<int, int>, std::shared_ptr<const SchurTransform>> cache;

} // namespace

std::shared_ptr<const SchurTransform> schur_unitary(int d, int n) {
    checked_power(d, n, dense_cap());
    if (n < 1) {
        throw std::invalid_argument("schur_unitary needs n >= 1");
    }
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        if (auto it = cache.find({d, n}); it != cache.end()) {
            return it->second;
        }
    }
    SchurLabelCodec codec(d, n);
    Cascade c(d, n, codec);
    std::shared_ptr<const SchurTransform> built = c.build();
    std::lock_guard<std::mutex> lock(cache_mutex);
    return cache.emplace(std::make_pair(d, n), built).first->second;
}

std::vector<SchurOutcome> measure_schur(const Vec &state, int d, int n, Granularity g,
                                        double norm_tol) {
    const auto st = schur_unitary(d, n);
    if (static_cast<std::size_t>(state.size()) != st->codec.compact_size()) {
        throw std::invalid_argument("measure_schur: state has the wrong dimension");
    }
    if (std::abs(state.norm() - 1.0) > norm_tol) {
        throw std::invalid_argument("measure_schur: state is not normalized");
    }
    const Vec out = st->U.cast<cplx>() * state;
    const auto &codec = st->codec;
    std::vector<SchurOutcome> table;
    for (int li = 0; li < codec.num_lambdas(); ++li) {
        const int Q = g == Granularity::lambda ? 1 : codec.dim_q(li);
        const int P = g == Granularity::full ? codec.dim_p(li) : 1;
        for (int a = 0; a < Q; ++a) {
            for (int b = 0; b < P; ++b) {
                SchurOutcome o;
                o.lambda = codec.lambda(li);
                o.q = g == Granularity::lambda ? -1 : a;
                o.p = g == Granularity::full ? b : -1;
                for (int q = 0; q < codec.dim_q(li); ++q) {
                    if (o.q >= 0 && q != o.q) {
                        continue;
                    }
                    for (int p = 0; p < codec.dim_p(li); ++p) {
                        if (o.p >= 0 && p != o.p) {
                            continue;
                        }
                        o.prob += std::norm(out(static_cast<long>(codec.compact_index(li, q, p))));
                    }
                }
                table.push_back(o);
            }
        }
    }
    return table;
}

DenseOperator central_projector_oracle(const Partition &lambda, int d, int n) {
    const auto lam = canonical(lambda);
    if (box_count(lam) != n || rows(lam) > d) {
        throw std::invalid_argument("central_projector_oracle: lambda is not in I_{d,n}");
    }
    const std::size_t D = checked_power(d, n, dense_cap());
    RMat acc = RMat::Zero(static_cast<long>(D), static_cast<long>(D));
    for (const auto &s : all_perms(n)) {
        const double chi = static_cast<double>(character(lam, s));
        if (chi == 0.0) {
            continue;
        }
        const auto act = perm_action(s, d);
        for (std::size_t i = 0; i < D; ++i) {
            acc(static_cast<long>(act[i]), static_cast<long>(i)) += chi;
        }
    }
    DenseOperator op;
    op.matrix = (acc * (static_cast<double>(dim_p(lam)) / static_cast<double>(factorial(n))))
                    .cast<cplx>();
    op.row_labels = computational_labels(d, n);
    op.col_labels = op.row_labels;
    return op;
}

Mat schur_projector(const Partition &lambda, int d, int n) {
    const auto st = schur_unitary(d, n);
    const int li = st->codec.lambda_index(lambda);
    if (li < 0) {
        throw std::invalid_argument("schur_projector: lambda is not in I_{d,n}");
    }
    const RMat B = st->block_rows(li);
    return (B.transpose() * B).cast<cplx>();
}

namespace {

std::pair<int, int> locate(const SchurTransform &st, const Partition &lambda, const GZPattern &q) {
    const int li = st.codec.lambda_index(lambda);
    if (li < 0) {
        throw std::invalid_argument("lambda is not in I_{d,n}");
    }
    const int qi = st.codec.gz(li).index_of(q);
    if (qi < 0) {
        throw std::invalid_argument("GZ pattern does not belong to Q_lambda^d");
    }
    return {li, qi};
}

} // namespace

Vec dfs_encode(const Partition &lambda, const GZPattern &q, const Vec &p_state, int d, int n) {
    const auto st = schur_unitary(d, n);
    const auto [li, qi] = locate(*st, lambda, q);
    if (p_state.size() != st->codec.dim_p(li)) {
        throw std::invalid_argument("dfs_encode: p_state dimension differs from dim P_lambda");
    }
    Vec out = Vec::Zero(st->U.cols());
    for (int p = 0; p < st->codec.dim_p(li); ++p) {
        const auto r = static_cast<long>(st->codec.compact_index(li, qi, p));
        for (Eigen::SparseMatrix<double, Eigen::RowMajor>::InnerIterator it(st->U, r); it; ++it) {
            out(it.col()) += it.value() * p_state(p);
        }
    }
    return out;
}

Vec dfs_decode(const Vec &state, const Partition &lambda, const GZPattern &q, int d, int n) {
    const auto st = schur_unitary(d, n);
    const auto [li, qi] = locate(*st, lambda, q);
    if (state.size() != st->U.cols()) {
        throw std::invalid_argument("dfs_decode: state dimension differs from d^n");
    }
    Vec out = Vec::Zero(st->codec.dim_p(li));
    for (int p = 0; p < st->codec.dim_p(li); ++p) {
        const auto r = static_cast<long>(st->codec.compact_index(li, qi, p));
        for (Eigen::SparseMatrix<double, Eigen::RowMajor>::InnerIterator it(st->U, r); it; ++it) {
            out(p) += it.value() * state(it.col());
        }
    }
    return out;
}

} // namespace schurkit
