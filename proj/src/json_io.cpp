// Copyright 2026 The mubking Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "mubking/json_io.hpp"

#include <cmath>

namespace mubking {

namespace {

double snap(double x) {
    return std::abs(x) < 1e-15 ? 0.0 : x;
}

}  // namespace

nlohmann::json complex_to_json(Complex z) {
    return nlohmann::json::array({snap(z.real()), snap(z.imag())});
}

nlohmann::json ket_to_json(const Ket &ket) {
    auto out = nlohmann::json::array();
    for (Eigen::Index i = 0; i < ket.size(); i++) {
        out.push_back(complex_to_json(ket(i)));
    }
    return out;
}

nlohmann::json operator_to_json(const Operator &op) {
    auto out = nlohmann::json::array();
    for (Eigen::Index r = 0; r < op.rows(); r++) {
        auto row = nlohmann::json::array();
        for (Eigen::Index c = 0; c < op.cols(); c++) {
            row.push_back(complex_to_json(op(r, c)));
        }
        out.push_back(std::move(row));
    }
    return out;
}

Complex complex_from_json(const nlohmann::json &j) {
    if (j.is_number()) {
        return {j.get<double>(), 0.0};
    }
    if (!j.is_array() || j.size() != 2) {
        throw std::invalid_argument("complex value must be [re, im]");
    }
    return {j[0].get<double>(), j[1].get<double>()};
}

Ket ket_from_json(const nlohmann::json &j) {
    if (!j.is_array()) {
        throw std::invalid_argument("ket must be a list of [re, im] pairs");
    }
    Ket out(j.size());
    for (size_t i = 0; i < j.size(); i++) {
        out(i) = complex_from_json(j[i]);
    }
    return out;
}

Operator operator_from_json(const nlohmann::json &j) {
    if (!j.is_array() || j.empty()) {
        throw std::invalid_argument("operator must be a non-empty list of rows");
    }
    size_t n = j.size();
    Operator out(n, n);
    for (size_t r = 0; r < n; r++) {
        if (!j[r].is_array() || j[r].size() != n) {
            throw std::invalid_argument("operator must be square");
        }
        for (size_t c = 0; c < n; c++) {
            out(r, c) = complex_from_json(j[r][c]);
        }
    }
    return out;
}

}  // namespace mubking
