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
 * Parameter sweeps over one or two configuration fields, evaluated on a worker
 * pool and assembled in a fixed row order.
 */
#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kerrsu/analytic_moments.hpp"
#include "kerrsu/config_file.hpp"
#include "kerrsu/csv.hpp"

namespace kerrsu {

enum class Quantity {
    delta_phi_si,
    delta_phi_hd,
    delta_phi_hd_lossy,
    qcrb_kerr,
    qcrb_coherent,
    n_kerr,
    n_cs,
};
std::string_view to_string(Quantity q);
std::optional<Quantity> parse_quantity(std::string_view text);
/// Whether the quantity can be undefined at some points (gets a flag column).
bool may_be_undefined(Quantity q);

enum class Engine { analytic, oracle_exact, oracle_linearized };
std::string_view to_string(Engine e);
/// Accepts both `oracle-exact` and `oracle_exact` spellings.
std::optional<Engine> parse_engine(std::string_view text);

/// Oracle engines refuse seeds brighter than this.
inline constexpr double kOracleAlphaCeiling = 3.0;
/// Centered-difference step of oracle sensitivities.
inline constexpr double kOracleStep = 1e-5;

struct Axis {
    std::string name;
    double start = 0.0;
    double stop = 0.0;
    int count = 2;
    bool open = false; ///< exclude `stop` (uniform periodic grid)

    [[nodiscard]] double value(int i) const;
};
/// "name start stop count [open]".
Axis parse_axis(std::string_view text);

struct ColumnSpec {
    std::string label;
    Quantity quantity = Quantity::delta_phi_hd;
    std::vector<std::pair<std::string, double>> overrides;
    Derivation lossy_path = Derivation::printed;
};
/// "label: quantity [field=value ...] [path=printed|rederived]".
ColumnSpec parse_column(std::string_view text);

struct SweepSpec {
    InterferometerConfig base;
    Axis axis1;
    std::optional<Axis> axis2;
    std::vector<ColumnSpec> columns;
    Engine engine = Engine::analytic;
    /// Adds a trailing engine column (sweep verb output).
    bool engine_column = false;
};

/// Throws ValidationError listing every problem with the spec.
void validate_sweep(const SweepSpec &spec);

/// Value at one point; nullopt where the sensitivity or bound is undefined.
std::optional<double> evaluate_quantity(const InterferometerConfig &cfg,
                                        const ColumnSpec &column,
                                        Engine engine);

/**
 * Evaluates every grid point with `jobs` workers. Rows are ordered by
 * (axis1 index, axis2 index) regardless of scheduling.
 */
CsvTable run_sweep(const SweepSpec &spec, int jobs = 1);

/// Reads a [sweep] (single quantity) or [figure] (named columns) section.
SweepSpec sweep_from_document(const ConfigDocument &doc,
                              std::string_view section);

} // namespace kerrsu
