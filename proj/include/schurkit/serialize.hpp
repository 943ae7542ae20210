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
 * MatrixDocument JSON: {"rows", "cols", "data": [[re, im], ...] row-major,
 * "row_labels", "col_labels"}.
 */
#pragma once

#include "schurkit/dense.hpp"

#include "json.hpp"

#include <string>

namespace schurkit {

using json = nlohmann::ordered_json;

json matrix_to_json(const DenseOperator &op);
json matrix_to_json(const Mat &m);
/// Throws std::invalid_argument on shape or label-count mismatch.
DenseOperator matrix_from_json(const json &doc);

/// Reads a MatrixDocument column vector (cols == 1) from a file.
Vec read_state_file(const std::string &path);
DenseOperator read_matrix_file(const std::string &path);

/// Shortest round-trip decimal for doubles; -0 printed as 0.
std::string format_double(double x);

} // namespace schurkit
