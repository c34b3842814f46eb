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
 * Figure reproduction. Each figure is a [figure] config; the built-in presets
 * are compiled from the files under configs/ so a committed file regenerates
 * its CSV exactly.
 */
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kerrsu/sweep.hpp"

namespace kerrsu {

const std::vector<std::string> &figure_names();
/// Built-in config text; throws ValidationError for an unknown name.
const std::string &figure_preset(const std::string &name);

struct FigureRun {
    SweepSpec spec;
    CsvTable table;
};

FigureRun run_figure(const ConfigDocument &doc, int jobs = 1);

/**
 * Writes <out_dir>/<name>.csv (and .svg when requested) and returns the paths
 * written. `config_path` replaces the built-in preset when given.
 */
std::vector<std::string> emit_figure(const std::string &name,
                                     const std::string &out_dir, int jobs,
                                     bool svg,
                                     const std::optional<std::string> &config_path =
                                         std::nullopt);

} // namespace kerrsu
