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

#pragma once

#include "json.hpp"
#include "mubking/linalg.hpp"

namespace mubking {

// Complex numbers travel as [re, im]; vectors as lists of pairs; matrices as
// lists of rows. Components below 1e-15 in magnitude are written as 0 so the
// output does not depend on rounding noise.

nlohmann::json complex_to_json(Complex z);
nlohmann::json ket_to_json(const Ket &ket);
nlohmann::json operator_to_json(const Operator &op);

Complex complex_from_json(const nlohmann::json &j);
Ket ket_from_json(const nlohmann::json &j);
/// Throws std::invalid_argument on ragged or non-square input.
Operator operator_from_json(const nlohmann::json &j);

}  // namespace mubking
