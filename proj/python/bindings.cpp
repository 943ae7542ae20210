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
#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "schurkit/channels.hpp"
#include "schurkit/characters.hpp"
#include "schurkit/cli.hpp"
#include "schurkit/dimensions.hpp"
#include "schurkit/duality.hpp"
#include "schurkit/qtypes.hpp"
#include "schurkit/schur_transform.hpp"
#include "schurkit/sn_fourier.hpp"
#include "schurkit/wigner.hpp"

#include <sstream>

namespace py = pybind11;
using namespace schurkit;

namespace {

py::dict operator_dict(const DenseOperator &op) {
    py::dict d;
    d["matrix"] = op.matrix;
    d["row_labels"] = op.row_labels;
    d["col_labels"] = op.col_labels;
    return d;
}

py::tuple run_cli(const std::vector<std::string> &args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
}

} // namespace

PYBIND11_MODULE(_schurkit, m) {
    m.doc() = "Schur transform toolkit";

    // Combinatorics.
    m.def("enumerate_partitions", &enumerate_partitions, py::arg("d"), py::arg("n"));
    m.def("dim_q", &dim_q, py::arg("lam"), py::arg("d"));
    m.def("dim_p", &dim_p, py::arg("lam"));
    m.def("kostka", &kostka, py::arg("lam"), py::arg("mu"));
    m.def(
        "schur_poly", [](const Partition &lam, const std::vector<double> &r) { return schur_poly(lam, r); },
        py::arg("lam"), py::arg("r"));
    m.def("character", &character, py::arg("lam"), py::arg("perm"));
    m.def("mn_character", &mn_character, py::arg("lam"), py::arg("cycle_type"));

    // Transforms.
    m.def(
        "cg_block", [](const Partition &lam, int d) { return operator_dict(cg_block(lam, d).op); },
        py::arg("lam"), py::arg("d"));
    m.def(
        "schur_unitary", [](int d, int n) { return schur_unitary(d, n)->dense(); }, py::arg("d"), py::arg("n"),
        "Dense U_Sch; rows are Schur labels in codec order.");
    m.def(
        "schur_labels",
        [](int d, int n) {
            const auto st = schur_unitary(d, n);
            std::vector<std::string> out;
            for (std::size_t r = 0; r < st->codec.compact_size(); ++r) {
                out.push_back(st->codec.label(r));
            }
            return out;
        },
        py::arg("d"), py::arg("n"));
    m.def(
        "measure_lambda",
        [](const Vec &state, int d, int n) {
            std::vector<std::pair<Partition, double>> out;
            for (const auto &o : measure_schur(state, d, n, Granularity::lambda)) {
                out.emplace_back(o.lambda, o.prob);
            }
            return out;
        },
        py::arg("state"), py::arg("d"), py::arg("n"));
    m.def(
        "schur_projector", [](const Partition &lam, int d, int n) { return schur_projector(lam, d, n); },
        py::arg("lam"), py::arg("d"), py::arg("n"));
    m.def(
        "central_projector",
        [](const Partition &lam, int d, int n) { return central_projector_oracle(lam, d, n).matrix; },
        py::arg("lam"), py::arg("d"), py::arg("n"));
    m.def(
        "verify_block_diagonal",
        [](const Mat &U, const Perm &s, int d, int n) {
            const auto rep = verify_block_diagonal(U, s, d, n);
            py::dict out;
            out["leakage"] = rep.leakage;
            out["max_residual"] = rep.max_residual;
            out["passed"] = rep.passed;
            return out;
        },
        py::arg("U"), py::arg("perm"), py::arg("d"), py::arg("n"));

    // Types.
    m.def("lambda_distribution", &lambda_distribution, py::arg("r"), py::arg("n"));
    m.def(
        "compress_rate",
        [](const std::vector<double> &r, int n, double R) {
            const auto rep = compress_rate(r, n, R);
            py::dict out;
            out["kept_mass"] = rep.kept_mass;
            out["error_mass"] = rep.error_mass;
            out["kept_dimension"] = rep.kept_dimension;
            out["dimension_ok"] = rep.dimension_ok;
            return out;
        },
        py::arg("r"), py::arg("n"), py::arg("rate"));
    m.def(
        "spectrum_failure_rate",
        [](const std::vector<double> &r, int n, int trials, std::uint64_t seed, double delta) {
            const auto rep = spectrum_estimate(r, n, trials, seed, {delta});
            return py::make_tuple(rep.failure_rate[0], rep.exact_failure[0]);
        },
        py::arg("r"), py::arg("n"), py::arg("trials"), py::arg("seed"), py::arg("delta"));

    // Fourier transform and phase estimation.
    m.def(
        "sn_qft", [](int n, bool from_schur) { return (from_schur ? sn_qft_from_schur(n) : sn_qft_explicit(n)).U; },
        py::arg("n"), py::arg("from_schur") = false);
    m.def(
        "gpe_marginals",
        [](const Vec &state, int d, int n) {
            std::vector<std::pair<Partition, double>> out;
            for (const auto &o : gpe_measure(state, d, n).outcomes) {
                out.emplace_back(o.lambda, o.prob);
            }
            return out;
        },
        py::arg("state"), py::arg("d"), py::arg("n"));

    // Channels.
    m.def("kronecker", &kronecker, py::arg("a"), py::arg("b"), py::arg("c"));
    m.def("invariant_basis", &invariant_basis, py::arg("a"), py::arg("b"), py::arg("c"));
    m.def("dephasing_isometry", &dephasing_isometry, py::arg("p"));
    m.def(
        "channel_normal_form",
        [](const Mat &U, int d_a, int d_b, int d_e, int n) {
            const auto rep = channel_normal_form(U, d_a, d_b, d_e, n);
            py::dict out;
            out["entries"] = rep.entries.size();
            out["round_trip"] = rep.round_trip;
            out["isometry"] = rep.isometry;
            return out;
        },
        py::arg("U"), py::arg("d_a"), py::arg("d_b"), py::arg("d_e"), py::arg("n"));

    m.def("run_cli", &run_cli, py::arg("args"), "Runs the command-line front end; returns (code, stdout, stderr).");
}
