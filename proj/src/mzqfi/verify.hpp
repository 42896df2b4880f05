// Copyright 2026 The mzqfi Authors
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

#ifndef MZQFI_VERIFY_HPP
#define MZQFI_VERIFY_HPP

#include <random>
#include <string>
#include <utility>
#include <vector>

#include "mzqfi/state_catalog.hpp"

namespace mzqfi {

struct NamedState {
    std::string name;
    InputStateSpec spec;
};

/// Catalog states small enough for the Fock oracle: |alpha|, |beta| <= 2,
/// r, z <= 1, n <= 4.
std::vector<NamedState> small_parameter_suite();

/// A random catalog state (any port kind, or TMSV) with |alpha| <= 3,
/// r, z <= 1.2 and n <= 5.
InputStateSpec random_catalog_state(std::mt19937_64 &rng);

enum class VerifyLevel { Quick, Full };

struct VerifyOptions {
    VerifyLevel level = VerifyLevel::Quick;
    // Test hook: negate S+ on the analytic side before comparing with the
    // oracle.
    bool flip_s_plus = false;
};

struct CheckResult {
    std::string name;
    bool passed = true;
    double observed = 0;
    double tolerance = 0;
    std::string detail;
};

struct VerifyReport {
    std::vector<CheckResult> checks;

    bool passed() const;
    std::string text() const;
    std::string json() const;
};

VerifyReport run_verify(const VerifyOptions &options);

}  // namespace mzqfi

#endif
