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
#include "schurkit/cli.hpp"

#include "schurkit/channels.hpp"
#include "schurkit/dimensions.hpp"
#include "schurkit/duality.hpp"
#include "schurkit/qtypes.hpp"
#include "schurkit/schur_transform.hpp"
#include "schurkit/serialize.hpp"
#include "schurkit/sn_fourier.hpp"
#include "schurkit/wigner.hpp"

#include "CLI11.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <stdexcept>

namespace schurkit::cli {

namespace {

struct Options {
    int d = 2;
    int n = 2;
    std::string lambda;
    std::string mu;
    std::string r;
    std::string state;
    std::string spec;
    std::string format = "table";
    std::string out;
    std::string delta = "0.3";
    double tol = 1e-10;
    double rate = 0.8;
    double eps = -1.0;
    double dephasing = -1.0;
    std::uint64_t seed = 0;
    int trials = -1;
    bool explicit_qft = false;
    bool matrix = false;
};

struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

struct Result {
    json doc;
    Table table;
    std::string text; ///< replaces the generic table rendering when set
    int code = kOk;
};

std::vector<double> parse_doubles(const std::string &s) {
    std::vector<double> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        double v = 0.0;
        try {
            v = std::stod(item, &used);
        } catch (const std::exception &) {
            throw std::invalid_argument("not a number: '" + item + "'");
        }
        if (used != item.size() || !std::isfinite(v)) {
            throw std::invalid_argument("not a number: '" + item + "'");
        }
        out.push_back(v);
    }
    if (out.empty()) {
        throw std::invalid_argument("empty number list");
    }
    return out;
}

std::string num(double x) { return format_double(x); }

json complex_json(cplx z) { return json::array({z.real() + 0.0, z.imag() + 0.0}); }

std::string padded_label(const Partition &lam, int d) {
    return "(" + weight_to_string(padded(lam, d)) + ")";
}

Partition required_lambda(const Options &o) {
    if (o.lambda.empty()) {
        throw std::invalid_argument("--lambda is required");
    }
    return parse_partition(o.lambda);
}

std::vector<double> required_r(const Options &o) {
    if (o.r.empty()) {
        throw std::invalid_argument("--r is required");
    }
    return parse_doubles(o.r);
}

void check_dn(const Options &o) {
    if (o.d < 1 || o.n < 1) {
        throw std::invalid_argument("--d and --n must be positive");
    }
}

Table matrix_table(const DenseOperator &op) {
    Table t;
    t.header = {"row", "col", "re", "im"};
    for (long r = 0; r < op.matrix.rows(); ++r) {
        for (long c = 0; c < op.matrix.cols(); ++c) {
            const cplx z = op.matrix(r, c);
            if (std::abs(z) > 1e-15) {
                t.rows.push_back({op.row_labels.at(r), op.col_labels.at(c), num(z.real()), num(z.imag())});
            }
        }
    }
    return t;
}

Result cmd_dims(const Options &o) {
    check_dn(o);
    Result res;
    res.doc["command"] = "dims";
    res.doc["d"] = o.d;
    res.doc["n"] = o.n;
    json irreps = json::array();
    res.table.header = {"lambda", "dim_q", "dim_p"};
    std::ostringstream text;
    unsigned long long total = 0;
    for (const auto &lam : enumerate_partitions(o.d, o.n)) {
        const auto q = dim_q(lam, o.d);
        const auto p = dim_p(lam);
        total += q * p;
        irreps.push_back({{"lambda", to_string(lam)}, {"dim_q", q}, {"dim_p", p}});
        res.table.rows.push_back({padded_label(lam, o.d), std::to_string(q), std::to_string(p)});
        text << padded_label(lam, o.d) << ":Q=" << q << ",P=" << p << "\n";
    }
    text << "total=" << total << "\n";
    res.doc["irreps"] = irreps;
    res.doc["total"] = total;
    res.text = text.str();
    return res;
}

Result cmd_kostka(const Options &o) {
    const Partition lam = required_lambda(o);
    Result res;
    res.doc["command"] = "kostka";
    res.doc["lambda"] = to_string(lam);
    json entries = json::array();
    res.table.header = {"mu", "K"};
    std::vector<Weight> mus;
    if (!o.mu.empty()) {
        mus.push_back(parse_weight(o.mu));
    } else {
        if (o.d < 1) {
            throw std::invalid_argument("--d must be positive");
        }
        mus = enumerate_weights(o.d, box_count(lam));
    }
    for (const auto &mu : mus) {
        const auto k = kostka(lam, mu);
        entries.push_back({{"mu", weight_to_string(mu)}, {"value", k}});
        res.table.rows.push_back({weight_to_string(mu), std::to_string(k)});
    }
    res.doc["entries"] = entries;
    return res;
}

Result cmd_schur(const Options &o) {
    check_dn(o);
    const auto st = schur_unitary(o.d, o.n);
    DenseOperator op{st->dense(), {}, computational_labels(o.d, o.n)};
    for (std::size_t r = 0; r < st->codec.compact_size(); ++r) {
        op.row_labels.push_back(st->codec.label(r));
    }
    Result res;
    res.doc = matrix_to_json(op);
    res.table = matrix_table(op);
    return res;
}

Result cmd_cg(const Options &o) {
    const Partition lam = required_lambda(o);
    if (o.d < 1 || rows(lam) > o.d) {
        throw std::invalid_argument("--lambda must have at most --d rows");
    }
    const CGBlock blk = cg_block(lam, o.d);
    Result res;
    res.doc = matrix_to_json(blk.op);
    res.table = matrix_table(blk.op);
    return res;
}

Result cmd_verify(const Options &o) {
    check_dn(o);
    const int trials = o.trials < 0 ? 20 : o.trials;
    std::mt19937_64 rng(o.seed);
    Result res;
    res.doc["command"] = "verify";
    res.doc["d"] = o.d;
    res.doc["n"] = o.n;
    res.doc["trials"] = trials;
    res.doc["seed"] = o.seed;
    res.table.header = {"trial", "perm", "leakage", "residual"};
    json results = json::array();
    double leak = 0.0, resid = 0.0;
    bool passed = true;
    for (int t = 0; t < trials; ++t) {
        const Mat U = haar_unitary(o.d, rng);
        const Perm s = random_perm(o.n, rng);
        const auto rep = verify_block_diagonal(U, s, o.d, o.n, o.tol, 10.0 * o.tol);
        leak = std::max(leak, rep.leakage);
        resid = std::max(resid, rep.max_residual);
        passed = passed && rep.passed;
        results.push_back({{"trial", t}, {"perm", perm_to_string(s)}, {"leakage", rep.leakage},
                           {"residual", rep.max_residual}});
        res.table.rows.push_back({std::to_string(t), perm_to_string(s), num(rep.leakage), num(rep.max_residual)});
    }
    res.doc["results"] = results;
    res.doc["max_leakage"] = leak;
    res.doc["max_residual"] = resid;
    res.doc["passed"] = passed;
    res.code = passed ? kOk : kBoundViolation;
    return res;
}

Mat density_input(const Options &o) {
    if (!o.state.empty()) {
        return read_matrix_file(o.state).matrix;
    }
    const auto r = required_r(o);
    Mat rho = Mat::Zero(static_cast<long>(r.size()), static_cast<long>(r.size()));
    for (std::size_t i = 0; i < r.size(); ++i) {
        rho(static_cast<long>(i), static_cast<long>(i)) = r[i];
    }
    return rho;
}

Result cmd_rho(const Options &o) {
    const Mat rho = density_input(o);
    const auto blocks = rho_blocks(rho, o.n, 1e-9);
    Result res;
    res.doc["command"] = "rho";
    res.doc["d"] = rho.rows();
    res.doc["n"] = o.n;
    res.table.header = {"lambda", "weight", "factor_residual"};
    json arr = json::array();
    double worst = 0.0;
    for (const auto &b : blocks) {
        worst = std::max(worst, b.factor_residual);
        arr.push_back({{"lambda", to_string(b.lambda)},
                       {"weight", b.weight},
                       {"factor_residual", b.factor_residual},
                       {"q_block", matrix_to_json(b.q_block)}});
        res.table.rows.push_back({to_string(b.lambda), num(b.weight), num(b.factor_residual)});
    }
    res.doc["blocks"] = arr;
    res.doc["max_factor_residual"] = worst;
    res.code = worst < std::max(o.tol, 1e-9) ? kOk : kBoundViolation;
    return res;
}

Result cmd_spectrum(const Options &o) {
    const auto r = required_r(o);
    const int trials = o.trials < 0 ? 10000 : o.trials;
    const auto deltas = parse_doubles(o.delta);
    const auto rep = spectrum_estimate(r, o.n, trials, o.seed, deltas);
    Result res;
    res.doc["command"] = "spectrum";
    res.doc["n"] = o.n;
    res.doc["r"] = spectrum_vector(r);
    res.doc["trials"] = trials;
    res.doc["seed"] = o.seed;
    json dist = json::array();
    for (std::size_t k = 0; k < rep.support.size(); ++k) {
        dist.push_back({{"lambda", to_string(rep.support[k])}, {"prob", rep.distribution[k]}});
    }
    res.doc["distribution"] = dist;
    json fails = json::array();
    res.table.header = {"delta", "failure_rate", "exact_failure", "bound", "within_bound"};
    bool ok = true;
    for (std::size_t i = 0; i < deltas.size(); ++i) {
        ok = ok && rep.within_bound[i];
        fails.push_back({{"delta", deltas[i]},
                         {"failure_rate", rep.failure_rate[i]},
                         {"exact_failure", rep.exact_failure[i]},
                         {"bound", rep.failure_bound[i]},
                         {"within_bound", static_cast<bool>(rep.within_bound[i])}});
        res.table.rows.push_back({num(deltas[i]), num(rep.failure_rate[i]), num(rep.exact_failure[i]),
                                  num(rep.failure_bound[i]), rep.within_bound[i] ? "yes" : "no"});
    }
    res.doc["failures"] = fails;
    res.code = ok ? kOk : kBoundViolation;
    return res;
}

Result cmd_concentrate(const Options &o, bool tol_given) {
    Mat psi;
    std::mt19937_64 rng(o.seed);
    if (!o.state.empty()) {
        const Vec v = read_state_file(o.state);
        const auto d = static_cast<long>(std::llround(std::sqrt(static_cast<double>(v.size()))));
        if (d * d != v.size()) {
            throw std::invalid_argument("concentrate: state length must be d^2");
        }
        psi = Mat(d, d);
        for (long a = 0; a < d; ++a) {
            for (long b = 0; b < d; ++b) {
                psi(a, b) = v(a * d + b);
            }
        }
    } else {
        const Vec v = random_state(static_cast<std::size_t>(o.d) * o.d, rng);
        psi = Mat(o.d, o.d);
        for (long a = 0; a < o.d; ++a) {
            for (long b = 0; b < o.d; ++b) {
                psi(a, b) = v(a * o.d + b);
            }
        }
    }
    const double tol = tol_given ? o.tol : 1e-8;
    const int samples = o.trials < 0 ? 1000 : o.trials;
    const auto rep = concentrate(psi, o.n, samples, o.seed, tol);
    Result res;
    res.doc["command"] = "concentrate";
    res.doc["d"] = psi.rows();
    res.doc["n"] = o.n;
    res.doc["seed"] = o.seed;
    res.table.header = {"lambda", "prob", "oracle_prob", "schmidt_deviation", "mixedness_deviation"};
    json arr = json::array();
    for (const auto &b : rep.branches) {
        arr.push_back({{"lambda", to_string(b.lambda)},
                       {"prob", b.prob},
                       {"oracle_prob", b.oracle_prob},
                       {"schmidt", b.schmidt},
                       {"schmidt_deviation", b.schmidt_deviation},
                       {"mixedness_deviation", b.mixedness_deviation},
                       {"factor_residual", b.factor_residual}});
        res.table.rows.push_back({to_string(b.lambda), num(b.prob), num(b.oracle_prob), num(b.schmidt_deviation),
                                  num(b.mixedness_deviation)});
    }
    res.doc["branches"] = arr;
    res.doc["cross_lambda_mass"] = rep.cross_lambda_mass;
    res.doc["sampled"] = rep.sampled;
    res.doc["disagreements"] = rep.disagreements;
    res.doc["verified"] = rep.verified;
    res.code = rep.verified ? kOk : kBoundViolation;
    return res;
}

Result cmd_compress(const Options &o) {
    const auto r = required_r(o);
    const auto rep = compress_rate(r, o.n, o.rate);
    Result res;
    res.doc["command"] = "compress";
    res.doc["n"] = o.n;
    res.doc["rate"] = o.rate;
    res.doc["rate_threshold"] = rep.rate_threshold;
    res.doc["kept_mass"] = rep.kept_mass;
    res.doc["error_mass"] = rep.error_mass;
    res.doc["qubits"] = rep.qubits;
    res.doc["kept_dimension"] = rep.kept_dimension;
    res.doc["dimension_ok"] = rep.dimension_ok;
    res.doc["error_bound"] = rep.error_bound;
    res.doc["error_bound_trivial"] = rep.error_bound_trivial;
    res.doc["error_ok"] = rep.error_ok;
    res.table.header = {"quantity", "value"};
    for (const auto &[k, v] : res.doc.items()) {
        if (k != "command") {
            res.table.rows.push_back({k, v.is_number_float() ? num(v.get<double>()) : v.dump()});
        }
    }
    res.code = rep.dimension_ok && rep.error_ok ? kOk : kBoundViolation;
    return res;
}

json bound_json(const BoundCheck &b) {
    return {{"value", b.value},         {"lower", b.lower},
            {"upper", b.upper},         {"lower_trivial", b.lower_trivial},
            {"upper_trivial", b.upper_trivial}, {"holds", b.holds}};
}

Result cmd_typebounds(const Options &o) {
    const auto P = spectrum_vector(required_r(o));
    const int d = static_cast<int>(P.size());
    Result res;
    res.doc["command"] = "typebounds";
    res.doc["n"] = o.n;
    res.doc["r"] = P;
    res.table.header = {"kind", "label", "value", "lower", "upper", "holds"};
    bool ok = true;
    json types = json::array();
    for (const auto &t : enumerate_weights(d, o.n)) {
        const auto rep = classical_type_bounds(t, P);
        ok = ok && rep.size_bound.holds && rep.mass_bound.holds;
        types.push_back({{"type", weight_to_string(t)},
                         {"size", rep.type_class_size},
                         {"size_bound", bound_json(rep.size_bound)},
                         {"mass_bound", bound_json(rep.mass_bound)}});
        res.table.rows.push_back({"type_size", weight_to_string(t), num(rep.size_bound.value),
                                  num(rep.size_bound.lower), num(rep.size_bound.upper),
                                  rep.size_bound.holds ? "yes" : "no"});
        res.table.rows.push_back({"type_mass", weight_to_string(t), num(rep.mass_bound.value),
                                  num(rep.mass_bound.lower), num(rep.mass_bound.upper),
                                  rep.mass_bound.holds ? "yes" : "no"});
    }
    res.doc["types"] = types;
    json traces = json::array();
    for (const auto &lam : enumerate_partitions(d, o.n)) {
        const auto b = trace_bound_check(lam, P, o.n, d);
        ok = ok && b.holds;
        json j = bound_json(b);
        j["lambda"] = to_string(lam);
        traces.push_back(j);
        res.table.rows.push_back({"trace", to_string(lam), num(b.value), num(b.lower), num(b.upper),
                                  b.holds ? "yes" : "no"});
    }
    res.doc["trace"] = traces;
    json typ = json::array();
    for (double delta : parse_doubles(o.delta)) {
        const auto tm = typical_mass(P, o.n, delta);
        ok = ok && tm.holds && tm.dimension <= tm.dimension_bound;
        typ.push_back({{"delta", delta},
                       {"mass", tm.mass},
                       {"lower_bound", tm.lower_bound},
                       {"trivially_satisfied", tm.trivially_satisfied},
                       {"holds", tm.holds},
                       {"dimension", tm.dimension},
                       {"dimension_bound", tm.dimension_bound}});
        res.table.rows.push_back({"typical_mass", "delta=" + num(delta), num(tm.mass), num(tm.lower_bound), "1",
                                  tm.holds ? (tm.trivially_satisfied ? "trivial" : "yes") : "no"});
    }
    res.doc["typical"] = typ;
    res.doc["all_hold"] = ok;
    res.code = ok ? kOk : kBoundViolation;
    return res;
}

Result cmd_qft(const Options &o) {
    if (o.n < 1) {
        throw std::invalid_argument("--n must be positive");
    }
    const FourierTransform F = o.explicit_qft ? sn_qft_explicit(o.n) : sn_qft_from_schur(o.n);
    const int trials = o.trials < 0 ? 0 : o.trials;
    const auto rep = verify_fourier(F, trials, o.seed, o.tol);
    Result res;
    res.doc["command"] = "qft";
    res.doc["n"] = o.n;
    res.doc["construction"] = o.explicit_qft ? "explicit" : "schur";
    res.doc["pairs_checked"] = rep.checks.size();
    res.doc["unitarity"] = rep.unitarity;
    res.doc["block_dims"] = rep.block_dims;
    res.doc["max_leakage"] = rep.max_leakage;
    res.doc["max_exact_residual"] = rep.max_exact_residual;
    res.doc["max_aligned_residual"] = rep.max_aligned_residual;
    json ph = json::array();
    for (long k = 0; k < rep.phases.size(); ++k) {
        ph.push_back(complex_json(rep.phases(k)));
    }
    res.doc["phases"] = ph;
    res.doc["passed"] = rep.passed;
    if (o.matrix) {
        res.doc["matrix"] = matrix_to_json(DenseOperator{F.U, F.row_labels, F.col_labels});
    }
    res.table.header = {"quantity", "value"};
    for (const char *k : {"pairs_checked", "unitarity", "max_leakage", "max_exact_residual", "max_aligned_residual",
                          "passed"}) {
        const json &v = res.doc[k];
        res.table.rows.push_back({k, v.is_number_float() ? num(v.get<double>()) : v.dump()});
    }
    res.code = rep.passed ? kOk : kBoundViolation;
    return res;
}

Vec state_input(const Options &o, std::size_t dim) {
    if (!o.state.empty()) {
        const Vec v = read_state_file(o.state);
        if (static_cast<std::size_t>(v.size()) != dim) {
            throw std::invalid_argument("--state has length " + std::to_string(v.size()) + ", expected " +
                                        std::to_string(dim));
        }
        return v;
    }
    std::mt19937_64 rng(o.seed);
    return random_state(dim, rng);
}

Result cmd_gpe(const Options &o) {
    check_dn(o);
    const Vec psi = state_input(o, checked_power(o.d, o.n, dense_cap()));
    const auto rep = gpe_measure(psi, o.d, o.n);
    Result res;
    res.doc["command"] = "gpe";
    res.doc["d"] = o.d;
    res.doc["n"] = o.n;
    res.table.header = {"lambda", "prob", "oracle_prob", "ancilla_fidelity", "state_fidelity"};
    json arr = json::array();
    for (const auto &out : rep.outcomes) {
        arr.push_back({{"lambda", to_string(out.lambda)},
                       {"prob", out.prob},
                       {"oracle_prob", out.oracle_prob},
                       {"ancilla_fidelity", out.ancilla_fidelity},
                       {"state_fidelity", out.state_fidelity}});
        res.table.rows.push_back({to_string(out.lambda), num(out.prob), num(out.oracle_prob),
                                  num(out.ancilla_fidelity), num(out.state_fidelity)});
    }
    res.doc["outcomes"] = arr;
    res.doc["max_marginal_error"] = rep.max_marginal_error;
    res.doc["min_ancilla_fidelity"] = rep.min_ancilla_fidelity;
    res.code = rep.max_marginal_error < o.tol ? kOk : kBoundViolation;
    return res;
}

Result cmd_channel(const Options &o, bool tol_given) {
    Mat U;
    int da = 2, db = 2, de = 2;
    if (!o.spec.empty()) {
        std::ifstream in(o.spec);
        if (!in) {
            throw std::invalid_argument("cannot open " + o.spec);
        }
        json spec;
        try {
            spec = json::parse(in);
        } catch (const json::parse_error &e) {
            throw std::invalid_argument(o.spec + ": " + e.what());
        }
        if (!spec.contains("isometry")) {
            throw std::invalid_argument(o.spec + ": missing \"isometry\"");
        }
        da = spec.value("d_a", 2);
        db = spec.value("d_b", 2);
        de = spec.value("d_e", 2);
        U = matrix_from_json(spec.at("isometry")).matrix;
    } else if (o.dephasing >= 0.0) {
        U = dephasing_isometry(o.dephasing);
    } else {
        throw std::invalid_argument("channel needs --spec FILE or --dephasing P");
    }
    const auto rep = channel_normal_form(U, da, db, de, o.n);
    const double tol = tol_given ? o.tol : 1e-9;
    Result res;
    res.doc["command"] = "channel";
    res.doc["n"] = o.n;
    res.doc["d_a"] = da;
    res.doc["d_b"] = db;
    res.doc["d_e"] = de;
    res.table.header = {"lambda_a", "q_a", "lambda_b", "q_b", "lambda_e", "q_e", "alpha", "re", "im"};
    json arr = json::array();
    for (const auto &e : rep.entries) {
        arr.push_back({{"lambda_a", to_string(e.lambda_a)},
                       {"q_a", e.q_a},
                       {"lambda_b", to_string(e.lambda_b)},
                       {"q_b", e.q_b},
                       {"lambda_e", to_string(e.lambda_e)},
                       {"q_e", e.q_e},
                       {"alpha", e.alpha},
                       {"value", complex_json(e.value)}});
        res.table.rows.push_back({to_string(e.lambda_a), std::to_string(e.q_a), to_string(e.lambda_b),
                                  std::to_string(e.q_b), to_string(e.lambda_e), std::to_string(e.q_e),
                                  std::to_string(e.alpha), num(e.value.real() + 0.0), num(e.value.imag() + 0.0)});
    }
    res.doc["entries"] = arr;
    res.doc["residual"] = rep.residual;
    res.doc["round_trip"] = rep.round_trip;
    res.doc["isometry"] = rep.isometry;
    res.doc["support_violation"] = rep.support_violation;
    if (o.eps >= 0.0) {
        json tt = json::array();
        for (const auto &t : typical_triples(U, db, de, o.n, o.eps)) {
            tt.push_back({{"lambda_a", to_string(t.lambda_a)},
                          {"lambda_b", to_string(t.lambda_b)},
                          {"lambda_e", to_string(t.lambda_e)},
                          {"max_mass", t.max_mass}});
        }
        res.doc["typical_triples"] = tt;
    }
    const bool ok = rep.residual < tol && rep.round_trip < tol && rep.isometry < tol;
    res.code = ok ? kOk : kBoundViolation;
    return res;
}

std::string csv_field(const std::string &s) {
    if (s.find_first_of(",\"\n") == std::string::npos) {
        return s;
    }
    std::string q = "\"";
    for (char c : s) {
        if (c == '"') {
            q += '"';
        }
        q += c;
    }
    return q + "\"";
}

std::string render(const Result &res, const std::string &format) {
    if (format == "json") {
        return res.doc.dump(2) + "\n";
    }
    std::ostringstream os;
    if (format == "csv") {
        auto line = [&os](const std::vector<std::string> &cells) {
            for (std::size_t i = 0; i < cells.size(); ++i) {
                os << (i ? "," : "") << csv_field(cells[i]);
            }
            os << "\n";
        };
        line(res.table.header);
        for (const auto &r : res.table.rows) {
            line(r);
        }
        return os.str();
    }
    if (!res.text.empty()) {
        return res.text;
    }
    std::vector<std::size_t> width(res.table.header.size(), 0);
    auto measure = [&width](const std::vector<std::string> &cells) {
        for (std::size_t i = 0; i < cells.size() && i < width.size(); ++i) {
            width[i] = std::max(width[i], cells[i].size());
        }
    };
    measure(res.table.header);
    for (const auto &r : res.table.rows) {
        measure(r);
    }
    auto line = [&](const std::vector<std::string> &cells) {
        std::string s;
        for (std::size_t i = 0; i < cells.size(); ++i) {
            s += cells[i];
            if (i + 1 < cells.size()) {
                s += std::string(width[i] - cells[i].size() + 2, ' ');
            }
        }
        os << s << "\n";
    };
    line(res.table.header);
    for (const auto &r : res.table.rows) {
        line(r);
    }
    return os.str();
}

void write_atomically(const std::string &path, const std::string &text) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream f(tmp, std::ios::binary);
        if (!f) {
            throw std::invalid_argument("cannot write " + path);
        }
        f << text;
        if (!f) {
            throw std::invalid_argument("cannot write " + path);
        }
    }
    std::filesystem::rename(tmp, path);
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    Options o;
    CLI::App app{"Schur transform toolkit", "schurkit"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all", "Help for every subcommand");

    struct Sub {
        CLI::App *app;
        std::function<Result(bool)> fn;
    };
    std::vector<Sub> subs;
    auto add = [&](const char *name, const char *desc, std::function<Result(bool)> fn,
                   const std::vector<std::string> &flags) {
        CLI::App *s = app.add_subcommand(name, desc);
        s->add_option("--format", o.format, "table, json or csv")
            ->check(CLI::IsMember({"table", "json", "csv"}))
            ->capture_default_str();
        s->add_option("--out", o.out, "Write the output to this file instead of stdout");
        for (const auto &f : flags) {
            if (f == "d") s->add_option("--d", o.d, "Local dimension")->capture_default_str();
            if (f == "n") s->add_option("--n", o.n, "Number of systems")->capture_default_str();
            if (f == "lambda") s->add_option("--lambda", o.lambda, "Partition, comma separated");
            if (f == "mu") s->add_option("--mu", o.mu, "Weight, comma separated");
            if (f == "r") s->add_option("--r", o.r, "Probabilities, comma separated");
            if (f == "state") s->add_option("--state", o.state, "MatrixDocument JSON file");
            if (f == "spec") s->add_option("--spec", o.spec, "Channel spec JSON file");
            if (f == "tol") s->add_option("--tol", o.tol, "Tolerance")->capture_default_str();
            if (f == "seed") s->add_option("--seed", o.seed, "RNG seed")->capture_default_str();
            if (f == "trials") s->add_option("--trials", o.trials, "Number of trials");
            if (f == "delta") s->add_option("--delta", o.delta, "Deviation(s), comma separated")->capture_default_str();
            if (f == "rate") s->add_option("--rate", o.rate, "Qubits per letter")->capture_default_str();
            if (f == "eps") s->add_option("--eps", o.eps, "Also list typical triples with mass >= eps");
            if (f == "dephasing") s->add_option("--dephasing", o.dephasing, "Use the dephasing isometry with this p");
            if (f == "explicit") s->add_flag("--explicit", o.explicit_qft, "Use the explicit transform");
            if (f == "matrix") s->add_flag("--matrix", o.matrix, "Include the transform matrix");
        }
        subs.push_back({s, std::move(fn)});
    };
    add("dims", "Irrep dimensions over I_{d,n}", [&](bool) { return cmd_dims(o); }, {"d", "n"});
    add("kostka", "Kostka numbers", [&](bool) { return cmd_kostka(o); }, {"d", "lambda", "mu"});
    add("schur", "The Schur transform as a MatrixDocument", [&](bool) { return cmd_schur(o); }, {"d", "n"});
    add("cg", "Clebsch-Gordan transform for Q_lambda (x) C^d", [&](bool) { return cmd_cg(o); }, {"d", "lambda"});
    add("verify", "Block-diagonalization checks on random (U, s)", [&](bool) { return cmd_verify(o); },
        {"d", "n", "tol", "seed", "trials"});
    add("rho", "Blocks of U_Sch rho^n U_Sch^dag", [&](bool) { return cmd_rho(o); }, {"n", "r", "state", "tol"});
    add("spectrum", "Spectrum estimation by weak Schur sampling", [&](bool) { return cmd_spectrum(o); },
        {"n", "r", "seed", "trials", "delta"});
    add("concentrate", "Entanglement concentration on psi^n", [&](bool t) { return cmd_concentrate(o, t); },
        {"d", "n", "state", "tol", "seed", "trials"});
    add("compress", "Rate-R compression", [&](bool) { return cmd_compress(o); }, {"n", "r", "rate"});
    add("typebounds", "Classical and quantum type bounds", [&](bool) { return cmd_typebounds(o); },
        {"n", "r", "delta"});
    add("qft", "S_n Fourier transform checks", [&](bool) { return cmd_qft(o); },
        {"n", "tol", "seed", "trials", "explicit", "matrix"});
    add("gpe", "Generalized phase estimation", [&](bool) { return cmd_gpe(o); }, {"d", "n", "state", "tol", "seed"});
    add("channel", "Normal form of U_N^n", [&](bool t) { return cmd_channel(o, t); },
        {"n", "spec", "tol", "dephasing", "eps"});

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp &e) {
        app.exit(e, out, err);
        return kOk;
    } catch (const CLI::CallForAllHelp &e) {
        app.exit(e, out, err);
        return kOk;
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return kUsage;
    }
    for (const auto &s : subs) {
        if (!s.app->parsed()) {
            continue;
        }
        try {
            const CLI::Option *tol_opt = s.app->get_option_no_throw("--tol");
            const Result res = s.fn(tol_opt != nullptr && tol_opt->count() > 0);
            const std::string text = render(res, o.format);
            if (o.out.empty()) {
                out << text;
            } else {
                write_atomically(o.out, text);
            }
            return res.code;
        } catch (const std::invalid_argument &e) {
            err << "error: " << e.what() << "\n";
        } catch (const std::length_error &e) {
            err << "error: " << e.what() << "\n";
        } catch (const std::out_of_range &e) {
            err << "error: " << e.what() << "\n";
        } catch (const std::overflow_error &e) {
            err << "error: " << e.what() << "\n";
        } catch (const std::filesystem::filesystem_error &e) {
            err << "error: " << e.what() << "\n";
        } catch (const json::exception &e) {
            err << "error: " << e.what() << "\n";
        }
        return kValidation;
    }
    err << app.help();
    return kUsage;
}

} // namespace schurkit::cli
