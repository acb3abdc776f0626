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

#include <cstdint>
#include <string>
#include <vector>

#include "mubking/galois.hpp"
#include "mubking/linalg.hpp"

namespace mubking {

struct CheckResult {
    std::string name;
    bool passed = true;
    /// Informational checks (conjectures, documented failures) never fail
    /// the suite.
    bool asserted = true;
    std::string detail;
};

struct SuiteReport {
    std::vector<CheckResult> checks;

    bool ok() const;
    /// First asserted check that failed, or nullptr.
    const CheckResult *first_failure() const;
};

struct SuiteConfig {
    ArithmeticMode mode = ArithmeticMode::galois;
    int dim = 2;
    /// all | field | pauli | mub | bell | king | wigner
    std::string suite = "all";
    double tol = kDefaultTolerance;
    std::uint64_t seed = 20050501;
    long trials = 10000;
};

std::vector<std::string> suite_names();

/// Builds the context for (mode, dim); throws std::invalid_argument when dim
/// is not a prime power (galois) or is below 2 (modular).
ArithmeticContext context_for_dim(ArithmeticMode mode, int dim);

SuiteReport run_suite(const SuiteConfig &config);

}  // namespace mubking
