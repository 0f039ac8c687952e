// Copyright 2026 The tfdcs Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//     http://www.apache.org/licenses/LICENSE-2.0
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#pragma once

// Property-verification harness: evaluates the module invariants on a
// seeded parameter grid and collects a pass/fail report.

#include <cstdint>
#include <string>
#include <vector>

#include "tfdcs/observables.hpp"

namespace tfdcs {

struct VerifyConfig {
    std::uint64_t seed = 0;
    double tail_tol = 1e-20;
    int grid_points = 6;    // random (alpha, theta) samples per property family
    bool sabotage = false;  // flips a sign in the trotter-to-round map
    PhysicalConstants constants;

    void validate() const;
};

struct PropertyResult {
    std::string name;
    std::string params;  // human-readable parameter summary
    double value = 0.0;
    double tolerance = 0.0;
    bool passed = false;
};

struct VerifyReport {
    VerifyConfig config;
    std::vector<PropertyResult> results;

    bool all_passed() const;
    int failures() const;
    /// One line per property, failures marked.
    std::string text() const;
    /// Summary document, schema "tfdcs.verify/1".
    std::string json() const;
};

VerifyReport run_verification(const VerifyConfig& config);

}  // namespace tfdcs
