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

#include "schurkit/cli.hpp"
#include "schurkit/serialize.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace schurkit;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::filesystem::path temp_path(const std::string &name) {
    return std::filesystem::temp_directory_path() / ("schurkit_test_" + name);
}

} // namespace

TEST_CASE("dims prints the irrep table") {
    const auto r = run({"dims", "--d", "2", "--n", "3"});
    CHECK(r.code == 0);
    CHECK(r.out == "(3,0):Q=4,P=1\n(2,1):Q=2,P=2\ntotal=8\n");
}

TEST_CASE("schur emits a MatrixDocument") {
    const auto r = run({"schur", "--d", "2", "--n", "1", "--format", "json"});
    REQUIRE(r.code == 0);
    const auto op = matrix_from_json(json::parse(r.out));
    CHECK(max_abs(op.matrix - Mat::Identity(2, 2)) == 0.0);
    CHECK(op.col_labels == std::vector<std::string>{"0", "1"});

    const auto big = run({"schur", "--d", "3", "--n", "3", "--format", "json"});
    REQUIRE(big.code == 0);
    const auto u = matrix_from_json(json::parse(big.out));
    CHECK(isometry_residual(u.matrix) < 1e-12);
    CHECK(u.row_labels.size() == 27);
}

TEST_CASE("verify passes and is deterministic") {
    const std::vector<std::string> args{"verify", "--d", "2", "--n", "4", "--trials", "5", "--seed", "7",
                                        "--format", "json"};
    const auto a = run(args);
    const auto b = run(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(json::parse(a.out)["passed"].get<bool>());
}

TEST_CASE("report commands run in every format") {
    const std::vector<std::vector<std::string>> cmds{
        {"kostka", "--lambda", "2,1", "--d", "3", "--mu", "1,1,1"},
        {"cg", "--lambda", "1", "--d", "2"},
        {"rho", "--n", "3", "--r", "0.7,0.3"},
        {"spectrum", "--r", "0.7,0.3", "--n", "8", "--trials", "200", "--seed", "1"},
        {"concentrate", "--n", "2", "--seed", "3", "--trials", "20"},
        {"compress", "--r", "0.9,0.1", "--n", "40"},
        {"typebounds", "--r", "0.8,0.2", "--n", "10"},
        {"qft", "--n", "3"},
        {"gpe", "--d", "2", "--n", "3", "--seed", "2"},
        {"channel", "--dephasing", "0.3", "--n", "2"},
    };
    for (const auto &c : cmds) {
        for (const std::string fmt : {"table", "json", "csv"}) {
            auto args = c;
            args.push_back("--format");
            args.push_back(fmt);
            const auto r = run(args);
            CAPTURE(c[0]);
            CAPTURE(fmt);
            CHECK(r.code == 0);
            CHECK(!r.out.empty());
            if (fmt == "json") {
                CHECK_NOTHROW((void)json::parse(r.out));
            }
        }
    }
}

TEST_CASE("exit codes") {
    CHECK(run({}).code == cli::kUsage);
    CHECK(run({"dims", "--bogus"}).code == cli::kUsage);
    CHECK(run({"nosuch"}).code == cli::kUsage);
    CHECK(run({"dims", "--d", "x", "--n", "2"}).code == cli::kUsage);
    CHECK(run({"dims", "--d", "0", "--n", "2"}).code == cli::kValidation);
    CHECK(run({"kostka", "--lambda", "1,2", "--d", "2", "--mu", "1,2"}).code == cli::kValidation);
    CHECK(run({"rho", "--n", "2", "--r", "0.5,0.6"}).code == cli::kValidation);
    CHECK(run({"schur", "--d", "2", "--n", "30"}).code == cli::kValidation);
    CHECK(run({"gpe", "--d", "2", "--n", "2", "--state", "/nonexistent/state.json"}).code ==
          cli::kValidation);
    CHECK(run({"--help"}).code == cli::kOk);
}

TEST_CASE("--out writes the file") {
    const auto path = temp_path("dims.json");
    std::filesystem::remove(path);
    const auto r = run({"dims", "--d", "2", "--n", "2", "--format", "json", "--out", path.string()});
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream in(path);
    REQUIRE(in.good());
    const auto doc = json::parse(in);
    CHECK(doc.contains("command"));
    std::filesystem::remove(path);
}

TEST_CASE("state files round trip through gpe") {
    const auto path = temp_path("state.json");
    Mat v = Mat::Zero(4, 1);
    v(0, 0) = 1.0;
    {
        std::ofstream f(path);
        f << matrix_to_json(v).dump();
    }
    const auto r = run({"gpe", "--d", "2", "--n", "2", "--state", path.string(), "--format", "json"});
    CHECK(r.code == 0);
    const auto doc = json::parse(r.out);
    CHECK(doc.contains("outcomes"));

    // Malformed documents are validation errors.
    {
        std::ofstream f(path);
        f << R"({"rows": 4, "cols": 1, "data": [[1, 0]], "row_labels": [], "col_labels": []})";
    }
    CHECK(run({"gpe", "--d", "2", "--n", "2", "--state", path.string()}).code == cli::kValidation);
    {
        std::ofstream f(path);
        f << "not json";
    }
    CHECK(run({"gpe", "--d", "2", "--n", "2", "--state", path.string()}).code == cli::kValidation);
    std::filesystem::remove(path);
}

TEST_CASE("MatrixDocument validation") {
    Mat m(2, 2);
    m << cplx(1, 2), 0, 0, cplx(-0.5, 0);
    const auto back = matrix_from_json(matrix_to_json(m));
    CHECK(max_abs(back.matrix - m) == 0.0);
    auto bad = matrix_to_json(m);
    bad["rows"] = 3;
    CHECK_THROWS_AS(matrix_from_json(bad), std::invalid_argument);
    CHECK(format_double(-0.0) == "0");
    CHECK(format_double(0.1) == "0.1");
}
