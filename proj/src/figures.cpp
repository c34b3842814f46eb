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

#include "kerrsu/figures.hpp"

#include <cmath>
#include <filesystem>
#include <limits>
#include <map>
#include <utility>

#include "kerrsu/svg.hpp"

namespace kerrsu {

namespace {

// Generated at configure time from configs/*.cfg.
#include "figure_presets.inc"

const std::map<std::string, std::string> &presets() {
    static const std::map<std::string, std::string> m = [] {
        std::map<std::string, std::string> out;
        for (const auto &[name, text] : kFigurePresets)
            out.emplace(name, text);
        return out;
    }();
    return m;
}

double cell_value(const std::string &s) {
    return s.empty() ? std::numeric_limits<double>::quiet_NaN()
                     : std::stod(s);
}

std::string render_svg(const std::string &name, const FigureRun &run) {
    const auto &rows = run.table.rows();
    const auto &header = run.table.header();
    if (!run.spec.axis2) {
        std::vector<double> x;
        for (const auto &r : rows)
            x.push_back(cell_value(r[0]));
        std::vector<PlotSeries> series;
        for (std::size_t c = 1; c < header.size(); ++c) {
            if (header[c].ends_with("_undefined") || header[c] == "engine")
                continue;
            PlotSeries s{header[c], {}};
            for (const auto &r : rows)
                s.y.push_back(cell_value(r[c]));
            series.push_back(std::move(s));
        }
        return line_plot_svg(name, run.spec.axis1.name, x, series);
    }
    const int n1 = run.spec.axis1.count, n2 = run.spec.axis2->count;
    std::vector<double> x, y, v;
    for (int i = 0; i < n1; ++i)
        x.push_back(run.spec.axis1.value(i));
    for (int j = 0; j < n2; ++j)
        y.push_back(run.spec.axis2->value(j));
    for (const auto &r : rows)
        v.push_back(cell_value(r[2]));
    return heatmap_svg(name + ": " + header[2], run.spec.axis1.name,
                       run.spec.axis2->name, x, y, v);
}

} // namespace

const std::vector<std::string> &figure_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto &[name, text] : kFigurePresets)
            out.emplace_back(name);
        return out;
    }();
    return names;
}

const std::string &figure_preset(const std::string &name) {
    const auto it = presets().find(name);
    if (it == presets().end()) {
        std::string known;
        for (const auto &n : figure_names())
            known += (known.empty() ? "" : ", ") + n;
        throw ValidationError(
            {"unknown figure '" + name + "' (known: " + known + ")"});
    }
    return it->second;
}

FigureRun run_figure(const ConfigDocument &doc, int jobs) {
    SweepSpec spec = sweep_from_document(doc, "figure");
    CsvTable table = run_sweep(spec, jobs);
    return {std::move(spec), std::move(table)};
}

std::vector<std::string> emit_figure(const std::string &name,
                                     const std::string &out_dir, int jobs,
                                     bool svg,
                                     const std::optional<std::string> &config_path) {
    const ConfigDocument doc =
        config_path ? load_config_file(*config_path)
                    : parse_config_text(figure_preset(name), name + ".cfg");
    const FigureRun run = run_figure(doc, jobs);
    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    if (ec)
        throw IoError("cannot create output directory '" + out_dir +
                      "': " + ec.message());
    const std::string base = (std::filesystem::path(out_dir) / name).string();
    std::vector<std::string> written = {base + ".csv"};
    run.table.write(written.back());
    if (svg) {
        written.push_back(base + ".svg");
        write_text_file(written.back(), render_svg(name, run));
    }
    return written;
}

} // namespace kerrsu
