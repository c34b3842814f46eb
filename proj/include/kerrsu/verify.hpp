// Copyright 2026 The kerrsu Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/**
 * @file
 * Closed forms against the Fock-space oracle on a fixed validation grid.
 *
 * The report is one CSV with three sections:
 *  - `moment`: every shipped closed form next to the linearized and exact
 *    oracle values;
 *  - `paper_discrepancy`: published expressions that disagree with the
 *    oracle, evaluated verbatim;
 *  - `summary`: worst linearized delta and the PASS/FAIL verdict.
 */
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kerrsu/csv.hpp"
#include "kerrsu/core_model.hpp"

namespace kerrsu {

enum class VerifyPreset { small, full };
std::optional<VerifyPreset> parse_preset(std::string_view text);

/// Pass threshold on the worst analytic-vs-linearized relative delta.
inline constexpr double kVerifyThreshold = 1e-8;

std::vector<InterferometerConfig> verification_grid(VerifyPreset preset);

struct VerifyOptions {
    VerifyPreset preset = VerifyPreset::small;
    int jobs = 1;
    bool exact = true; ///< include the exact-Kerr oracle column
};

struct VerificationReport {
    CsvTable table{{}};
    std::size_t points = 0;
    double worst_linearized = 0.0;
    bool pass = false;
};

/// |a - b| / |b|, or |a - b| when b vanishes.
double relative_delta(complex a, complex b);

VerificationReport run_verification(const VerifyOptions &options);

} // namespace kerrsu
