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
#include "schurkit/serialize.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace schurkit {

json matrix_to_json(const DenseOperator &op) {
    const Mat &m = op.matrix;
    if (!op.row_labels.empty() && op.row_labels.size() != static_cast<std::size_t>(m.rows())) {
        throw std::invalid_argument("row label count does not match the matrix");
    }
    if (!op.col_labels.empty() && op.col_labels.size() != static_cast<std::size_t>(m.cols())) {
        throw std::invalid_argument("column label count does not match the matrix");
    }
    json doc;
    doc["rows"] = m.rows();
    doc["cols"] = m.cols();
    json data = json::array();
    for (long r = 0; r < m.rows(); ++r) {
        for (long c = 0; c < m.cols(); ++c) {
            // Adding 0.0 turns -0 into 0 so output does not depend on rounding signs.
            data.push_back(json::array({m(r, c).real() + 0.0, m(r, c).imag() + 0.0}));
        }
    }
    doc["data"] = std::move(data);
    doc["row_labels"] = op.row_labels;
    doc["col_labels"] = op.col_labels;
    return doc;
}

json matrix_to_json(const Mat &m) {
    DenseOperator op{m, {}, {}};
    for (long r = 0; r < m.rows(); ++r) {
        op.row_labels.push_back(std::to_string(r));
    }
    for (long c = 0; c < m.cols(); ++c) {
        op.col_labels.push_back(std::to_string(c));
    }
    return matrix_to_json(op);
}

DenseOperator matrix_from_json(const json &doc) {
    if (!doc.is_object() || !doc.contains("rows") || !doc.contains("cols") || !doc.contains("data")) {
        throw std::invalid_argument("matrix document needs rows, cols and data");
    }
    const long rows = doc.at("rows").get<long>();
    const long cols = doc.at("cols").get<long>();
    const auto &data = doc.at("data");
    if (rows < 0 || cols < 0 || !data.is_array() || static_cast<long>(data.size()) != rows * cols) {
        throw std::invalid_argument("matrix document: data length must equal rows * cols");
    }
    DenseOperator op;
    op.matrix = Mat(rows, cols);
    for (long k = 0; k < rows * cols; ++k) {
        const auto &e = data[static_cast<std::size_t>(k)];
        if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number()) {
            throw std::invalid_argument("matrix document: entries must be [re, im]");
        }
        op.matrix(k / std::max(cols, 1L), k % std::max(cols, 1L)) = cplx(e[0].get<double>(), e[1].get<double>());
    }
    if (doc.contains("row_labels")) {
        op.row_labels = doc.at("row_labels").get<std::vector<std::string>>();
    }
    if (doc.contains("col_labels")) {
        op.col_labels = doc.at("col_labels").get<std::vector<std::string>>();
    }
    if (!op.row_labels.empty() && static_cast<long>(op.row_labels.size()) != rows) {
        throw std::invalid_argument("matrix document: row_labels length mismatch");
    }
    if (!op.col_labels.empty() && static_cast<long>(op.col_labels.size()) != cols) {
        throw std::invalid_argument("matrix document: col_labels length mismatch");
    }
    return op;
}

DenseOperator read_matrix_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw std::invalid_argument("cannot open " + path);
    }
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error &e) {
        throw std::invalid_argument(path + ": " + e.what());
    }
    return matrix_from_json(doc);
}

Vec read_state_file(const std::string &path) {
    const DenseOperator op = read_matrix_file(path);
    if (op.matrix.cols() != 1) {
        throw std::invalid_argument(path + ": state must be a column vector");
    }
    return op.matrix.col(0);
}

std::string format_double(double x) {
    if (x == 0.0) {
        return "0";
    }
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), x);
    return std::string(buf, res.ptr);
}

} // namespace schurkit
