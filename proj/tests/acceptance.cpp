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

// Acceptance run: one PASS/FAIL line per criterion, each with its own
// tolerance and wall-clock limit. Exits nonzero if any criterion fails.

#include "fixtures.hpp"
#include "schurkit/channels.hpp"
#include "schurkit/dimensions.hpp"
#include "schurkit/duality.hpp"
#include "schurkit/qtypes.hpp"
#include "schurkit/schur_transform.hpp"
#include "schurkit/sn_fourier.hpp"
#include "schurkit/tableaux.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace schurkit;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;
};

int failures = 0;

std::vector<int> selected;

void criterion(int id, const std::string &name, double limit_s, const std::function<Outcome()> &body) {
    if (!selected.empty() && std::find(selected.begin(), selected.end(), id) == selected.end()) {
        return;
    }
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = body();
    } catch (const std::exception &e) {
        o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool in_time = secs < limit_s;
    const bool pass = o.ok && in_time;
    if (!pass) {
        ++failures;
    }
    std::printf("criterion %2d %s  %s  [%s; %.2fs < %.0fs%s]\n", id, pass ? "PASS" : "FAIL", name.c_str(),
                o.detail.c_str(), secs, limit_s, in_time ? "" : " exceeded");
    std::fflush(stdout);
}

std::string sci(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.1e", x);
    return buf;
}

Outcome c1_examples() {
    const double e2 = test::qubit_fixture_deviation(2);
    const double e3 = test::qubit_fixture_deviation(3);
    return {e2 < 1e-10 && e3 < 1e-10, "n=2 dev " + sci(e2) + ", n=3 dev " + sci(e3) + " (tol 1e-10)"};
}

Outcome c2_duality() {
    std::mt19937_64 rng(2026);
    double leak = 0, res = 0;
    int cases = 0;
    for (int d = 1; d <= 32; ++d) {
        for (int n = 1; n <= 10; ++n) {
            const std::size_t D = ipow(d, n);
            if (D > 1024 || (d == 1 && n > 1)) {
                break;
            }
            for (int t = 0; t < 20; ++t) {
                const Mat U = haar_unitary(d, rng);
                const Perm s = random_perm(n, rng);
                const auto rep = verify_block_diagonal(U, s, d, n, 1e-10, 1e-9);
                leak = std::max(leak, rep.leakage);
                res = std::max(res, rep.max_residual);
            }
            ++cases;
        }
    }
    return {leak < 1e-10 && res < 1e-9, std::to_string(cases) + " (d,n) x 20 pairs, leakage " + sci(leak) +
                                            " (tol 1e-10), residual " + sci(res) + " (tol 1e-9)"};
}

Outcome c3_projectors() {
    double worst = 0;
    for (int d = 1; d <= 3; ++d) {
        for (int n = 1; n <= 4; ++n) {
            for (const auto &lam : enumerate_partitions(d, n)) {
                worst = std::max(worst, max_abs(schur_projector(lam, d, n) -
                                                central_projector_oracle(lam, d, n).matrix));
            }
        }
    }
    return {worst < 1e-9, "max entry diff " + sci(worst) + " (tol 1e-9)"};
}

Outcome c4_dimensions() {
    bool ok = true;
    for (int d = 1; d <= 4; ++d) {
        for (int n = 0; n <= 6; ++n) {
            std::uint64_t total = 0;
            for (const auto &lam : enumerate_partitions(d, n)) {
                total += dim_q(lam, d) * dim_p(lam);
            }
            ok = ok && total == ipow(d, n);
        }
    }
    bool enum_ok = true;
    for (int n = 0; n <= 6; ++n) {
        for (const auto &lam : enumerate_partitions(std::max(1, n), n)) {
            enum_ok = enum_ok && enumerate_yy(lam).size() == dim_p(lam);
            for (int d = std::max(1, rows(lam)); d <= 4; ++d) {
                enum_ok = enum_ok && enumerate_gz(lam, d).size() == dim_q(lam, d);
            }
        }
    }
    bool bounds_ok = true;
    for (int d = 1; d <= 3; ++d) {
        for (int n = 1; n <= 10; ++n) {
            const long double poly = std::pow(static_cast<long double>(n + d), d * (d - 1) / 2.0L);
            for (const auto &lam : enumerate_partitions(d, n)) {
                const auto m = static_cast<long double>(multinomial(lam));
                const auto dq = static_cast<long double>(dim_q(lam, d));
                const auto dp = static_cast<long double>(dim_p(lam));
                bounds_ok = bounds_ok && dq <= poly && dp <= m && m / poly <= dp;
            }
        }
    }
    return {ok && enum_ok && bounds_ok, std::string("sum=d^n ") + (ok ? "exact" : "MISMATCH") +
                                            ", enumeration " + (enum_ok ? "exact" : "MISMATCH") +
                                            ", bounds " + (bounds_ok ? "hold" : "VIOLATED")};
}

Outcome c5_qtypes() {
    const std::vector<double> r{0.8, 0.2};
    int checked = 0;
    bool ok = true;
    for (int n = 1; n <= 20; ++n) {
        for (const auto &lam : enumerate_partitions(2, n)) {
            ok = ok && trace_bound_check(lam, r, n, 2).holds;
            ++checked;
        }
    }
    std::string typ;
    for (int n : {10, 20, 40}) {
        const auto t = typical_mass(r, n, 0.3);
        ok = ok && (t.holds || t.trivially_satisfied);
        typ += " n=" + std::to_string(n) + (t.trivially_satisfied ? ":trivial" : (t.holds ? ":holds" : ":FAILS"));
    }
    return {ok, std::to_string(checked) + " sandwiches; typical mass (delta 0.3)" + typ};
}

Outcome c6_spectrum() {
    const std::vector<double> r{0.7, 0.3};
    double dist_err = 0;
    std::vector<double> fails;
    for (int n : {8, 16, 32}) {
        const auto rep = spectrum_estimate(r, n, 100000, 20260 + n, {0.3});
        for (std::size_t k = 0; k < rep.support.size(); ++k) {
            const double expect =
                static_cast<double>(dim_p(rep.support[k])) * schur_poly_kostka(rep.support[k], r);
            dist_err = std::max(dist_err, std::abs(rep.distribution[k] - expect));
        }
        fails.push_back(rep.failure_rate[0]);
    }
    const bool mono = fails[0] >= fails[1] && fails[1] >= fails[2];
    std::ostringstream os;
    os << "distribution err " << sci(dist_err) << " (tol 1e-12); failure at delta 0.3: " << fails[0] << ", "
       << fails[1] << ", " << fails[2] << (mono ? " nonincreasing" : " NOT monotone");
    return {dist_err < 1e-12 && mono, os.str()};
}

Outcome c7_concentration() {
    std::mt19937_64 rng(77);
    double worst = 0;
    int disagreements = 0;
    bool ok = true;
    for (int n = 1; n <= 4; ++n) {
        for (int t = 0; t < 5; ++t) {
            const Vec v = random_state(4, rng);
            const auto rep = concentrate(v.reshaped(2, 2), n, 200, 100 * n + t);
            ok = ok && rep.verified;
            disagreements += rep.disagreements;
            for (const auto &b : rep.branches) {
                if (b.prob > 1e-12) {
                    worst = std::max(worst, b.schmidt_deviation);
                }
            }
        }
    }
    ok = ok && disagreements == 0 && worst < 1e-8;
    return {ok, "n<=4 x 5 states, disagreements " + std::to_string(disagreements) + ", Schmidt dev " + sci(worst) +
                    " (tol 1e-8)"};
}

Outcome c8_fourier() {
    double unit = 0;
    for (int n = 1; n <= 4; ++n) {
        const auto F = sn_qft_from_schur(n);
        const long N = F.U.rows();
        unit = std::max(unit, max_abs(F.U * F.U.adjoint() - Mat::Identity(N, N)));
    }
    const auto rep = verify_fourier(sn_qft_from_schur(3), 0, 0, 1e-10);
    const bool ok = unit < 1e-10 && rep.passed && rep.checks.size() == 36;
    return {ok, "unitarity " + sci(unit) + " (tol 1e-10); n=3 " + std::to_string(rep.checks.size()) +
                    " pairs, leakage " + sci(rep.max_leakage) + ", aligned residual " +
                    sci(rep.max_aligned_residual)};
}

Outcome c9_gpe() {
    std::mt19937_64 rng(99);
    double err = 0, inv = 0;
    for (int n = 1; n <= 4; ++n) {
        for (int t = 0; t < 50; ++t) {
            const Vec psi = random_state(ipow(2, n), rng);
            const auto a = gpe_measure(psi, 2, n);
            const auto b = gpe_measure(tensor_power(haar_unitary(2, rng), n) * psi, 2, n);
            err = std::max({err, a.max_marginal_error, b.max_marginal_error});
            for (std::size_t k = 0; k < a.outcomes.size(); ++k) {
                inv = std::max(inv, std::abs(a.outcomes[k].prob - b.outcomes[k].prob));
            }
        }
    }
    return {err < 1e-10 && inv < 1e-10, "n<=4 x 50 states, marginal err " + sci(err) + ", rotation shift " +
                                            sci(inv) + " (tol 1e-10)"};
}

Outcome c10_channel() {
    const auto rep = channel_normal_form(dephasing_isometry(0.3), 2, 2, 2, 2);
    bool kron_ok = true;
    int triples = 0;
    for (int n = 1; n <= 4; ++n) {
        const auto parts = enumerate_partitions(n, n);
        for (const auto &a : parts) {
            for (const auto &b : parts) {
                for (const auto &c : parts) {
                    kron_ok = kron_ok && invariant_basis(a, b, c).size() == kronecker(a, b, c);
                    ++triples;
                }
            }
        }
    }
    const bool ok = rep.round_trip < 1e-9 && rep.isometry < 1e-9 && kron_ok;
    return {ok, "round trip " + sci(rep.round_trip) + ", isometry " + sci(rep.isometry) + " (tol 1e-9); " +
                    std::to_string(triples) + " Kronecker triples " + (kron_ok ? "match" : "MISMATCH")};
}

} // namespace

int main(int argc, char **argv) {
    // Optional arguments select criteria by number.
    for (int i = 1; i < argc; ++i) {
        selected.push_back(std::atoi(argv[i]));
    }
    criterion(1, "qubit examples", 1, c1_examples);
    criterion(2, "duality suite", 60, c2_duality);
    criterion(3, "projector oracle", 30, c3_projectors);
    criterion(4, "dimension ledger", 5, c4_dimensions);
    criterion(5, "quantum-type bounds", 10, c5_qtypes);
    criterion(6, "spectrum estimation", 30, c6_spectrum);
    criterion(7, "concentration", 60, c7_concentration);
    criterion(8, "S_n Fourier", 60, c8_fourier);
    criterion(9, "phase estimation", 120, c9_gpe);
    criterion(10, "channel normal form", 60, c10_channel);
    std::printf("%d of %zu criteria failed\n", failures, selected.empty() ? std::size_t{10} : selected.size());
    return failures == 0 ? 0 : 1;
}
