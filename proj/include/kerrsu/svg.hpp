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
 * Minimal SVG rendering for quick looks at sweep output. CSV files remain the
 * data of record.
 */
#pragma once

#include <string>
#include <vector>

namespace kerrsu {

struct PlotSeries {
    std::string label;
    std::vector<double> y; ///< NaN marks a gap
};

std::string line_plot_svg(const std::string &title, const std::string &xlabel,
                          const std::vector<double> &x,
                          const std::vector<PlotSeries> &series);

/// values[i * ny + j] at (x[i], y[j]); NaN cells are left blank.
std::string heatmap_svg(const std::string &title, const std::string &xlabel,
                        const std::string &ylabel, const std::vector<double> &x,
                        const std::vector<double> &y,
                        const std::vector<double> &values);

/// Throws IoError on failure.
void write_text_file(const std::string &path, const std::string &text);

} // namespace kerrsu
