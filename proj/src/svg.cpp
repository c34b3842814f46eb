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

#include "kerrsu/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>

#include "kerrsu/csv.hpp"
#include "kerrsu/errors.hpp"

namespace kerrsu {

namespace {

constexpr double kW = 720, kH = 480, kLeft = 80, kRight = 200, kTop = 40,
                 kBottom = 60;

const char *const kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                "#ff7f0e", "#8c564b", "#e377c2", "#7f7f7f"};

std::string esc(const std::string &s) {
    std::string o;
    for (char c : s) {
        switch (c) {
        case '<':
            o += "&lt;";
            break;
        case '>':
            o += "&gt;";
            break;
        case '&':
            o += "&amp;";
            break;
        default:
            o += c;
        }
    }
    return o;
}

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

std::string tick(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4g", v);
    return buf;
}

struct Range {
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();
    void add(double v) {
        if (std::isfinite(v)) {
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
    }
    void settle() {
        if (!std::isfinite(lo)) {
            lo = 0;
            hi = 1;
        }
        if (hi == lo) {
            hi += 0.5 * (std::abs(hi) + 1);
            lo -= 0.5 * (std::abs(lo) + 1);
        }
    }
};

std::string frame(const std::string &title, const std::string &xlabel,
                  const Range &xr, const std::string &ylabel, const Range &yr) {
    std::string s = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" +
                    num(kW) + "\" height=\"" + num(kH) + "\">\n";
    s += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    s += "<text x=\"" + num(kW / 2) +
         "\" y=\"24\" text-anchor=\"middle\" font-size=\"16\">" + esc(title) +
         "</text>\n";
    const double pw = kW - kLeft - kRight, ph = kH - kTop - kBottom;
    s += "<rect x=\"" + num(kLeft) + "\" y=\"" + num(kTop) + "\" width=\"" +
         num(pw) + "\" height=\"" + num(ph) +
         "\" fill=\"none\" stroke=\"black\"/>\n";
    for (int i = 0; i <= 4; ++i) {
        const double fx = kLeft + pw * i / 4, fy = kTop + ph * (1 - i / 4.0);
        s += "<text x=\"" + num(fx) + "\" y=\"" + num(kH - kBottom + 18) +
             "\" text-anchor=\"middle\" font-size=\"11\">" +
             tick(xr.lo + (xr.hi - xr.lo) * i / 4) + "</text>\n";
        s += "<text x=\"" + num(kLeft - 6) + "\" y=\"" + num(fy + 4) +
             "\" text-anchor=\"end\" font-size=\"11\">" +
             tick(yr.lo + (yr.hi - yr.lo) * i / 4) + "</text>\n";
    }
    s += "<text x=\"" + num(kLeft + pw / 2) + "\" y=\"" + num(kH - 16) +
         "\" text-anchor=\"middle\" font-size=\"13\">" + esc(xlabel) +
         "</text>\n";
    if (!ylabel.empty())
        s += "<text x=\"16\" y=\"" + num(kTop + ph / 2) +
             "\" font-size=\"13\" transform=\"rotate(-90 16 " +
             num(kTop + ph / 2) + ")\" text-anchor=\"middle\">" + esc(ylabel) +
             "</text>\n";
    return s;
}

} // namespace

std::string line_plot_svg(const std::string &title, const std::string &xlabel,
                          const std::vector<double> &x,
                          const std::vector<PlotSeries> &series) {
    Range xr, yr;
    for (double v : x)
        xr.add(v);
    for (const auto &s : series)
        for (double v : s.y)
            yr.add(v);
    xr.settle();
    yr.settle();
    std::string out = frame(title, xlabel, xr, "", yr);
    const double pw = kW - kLeft - kRight, ph = kH - kTop - kBottom;
    auto px = [&](double v) { return kLeft + pw * (v - xr.lo) / (xr.hi - xr.lo); };
    auto py = [&](double v) {
        return kTop + ph * (1 - (v - yr.lo) / (yr.hi - yr.lo));
    };
    for (std::size_t k = 0; k < series.size(); ++k) {
        const char *color = kPalette[k % std::size(kPalette)];
        std::string path;
        bool pen = false;
        for (std::size_t i = 0; i < x.size() && i < series[k].y.size(); ++i) {
            const double v = series[k].y[i];
            if (!std::isfinite(v)) {
                pen = false;
                continue;
            }
            path += (pen ? "L" : "M") + num(px(x[i])) + " " + num(py(v)) + " ";
            pen = true;
        }
        out += "<path d=\"" + path + "\" fill=\"none\" stroke=\"" + color +
               "\" stroke-width=\"1.5\"/>\n";
        out += "<text x=\"" + num(kW - kRight + 10) + "\" y=\"" +
               num(kTop + 16 * (k + 1)) + "\" font-size=\"11\" fill=\"" +
               color + "\">" + esc(series[k].label) + "</text>\n";
    }
    out += "</svg>\n";
    return out;
}

std::string heatmap_svg(const std::string &title, const std::string &xlabel,
                        const std::string &ylabel, const std::vector<double> &x,
                        const std::vector<double> &y,
                        const std::vector<double> &values) {
    Range xr, yr, vr;
    for (double v : x)
        xr.add(v);
    for (double v : y)
        yr.add(v);
    for (double v : values)
        vr.add(v);
    xr.settle();
    yr.settle();
    vr.settle();
    std::string out = frame(title, xlabel, xr, ylabel, yr);
    const double pw = kW - kLeft - kRight, ph = kH - kTop - kBottom;
    const double cw = pw / std::max<std::size_t>(1, x.size());
    const double chh = ph / std::max<std::size_t>(1, y.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        for (std::size_t j = 0; j < y.size(); ++j) {
            const double v = values[i * y.size() + j];
            if (!std::isfinite(v))
                continue;
            // log scale suits sensitivities spanning decades
            double t = (v - vr.lo) / (vr.hi - vr.lo);
            if (vr.lo > 0)
                t = std::log(v / vr.lo) / std::log(vr.hi / vr.lo);
            const int g = static_cast<int>(std::lround(255 * (1 - t)));
            char color[16];
            std::snprintf(color, sizeof color, "#%02x%02xff", g, g);
            out += "<rect x=\"" + num(kLeft + cw * i) + "\" y=\"" +
                   num(kTop + ph - chh * (j + 1)) + "\" width=\"" +
                   num(cw + 0.5) + "\" height=\"" + num(chh + 0.5) +
                   "\" fill=\"" + color + "\"/>\n";
        }
    }
    out += "<text x=\"" + num(kW - kRight + 10) + "\" y=\"" + num(kTop + 16) +
           "\" font-size=\"11\">min " + format_double(vr.lo) + "</text>\n";
    out += "<text x=\"" + num(kW - kRight + 10) + "\" y=\"" + num(kTop + 32) +
           "\" font-size=\"11\">max " + format_double(vr.hi) + "</text>\n";
    out += "</svg>\n";
    return out;
}

void write_text_file(const std::string &path, const std::string &text) {
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f)
        throw IoError("cannot open '" + path + "' for writing");
    f.write(text.data(), static_cast<std::streamsize>(text.size()));
    if (!f)
        throw IoError("write to '" + path + "' failed");
}

} // namespace kerrsu
