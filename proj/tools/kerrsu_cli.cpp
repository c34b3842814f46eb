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

// kerrsu: figure reproduction, sweeps, optimum search and oracle verification.
//
// Exit codes: 0 success, 2 invalid input, 3 truncation infeasible, 4 I/O.

#include <CLI11.hpp>

#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <thread>

#include "kerrsu/analytic_moments.hpp"
#include "kerrsu/config_file.hpp"
#include "kerrsu/figures.hpp"
#include "kerrsu/fock_oracle.hpp"
#include "kerrsu/sensitivity.hpp"
#include "kerrsu/svg.hpp"
#include "kerrsu/sweep.hpp"
#include "kerrsu/verify.hpp"

namespace {

using namespace kerrsu;

constexpr int kExitInvalid = 2;
constexpr int kExitTruncation = 3;
constexpr int kExitIo = 4;

int default_jobs() {
    return static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
}

Engine engine_or_throw(const std::string &text) {
    const auto e = parse_engine(text);
    if (!e)
        throw ValidationError({"unknown engine '" + text +
                               "' (analytic, oracle-exact, oracle-linearized)"});
    return *e;
}

Derivation path_or_throw(const std::string &text) {
    if (text == "printed")
        return Derivation::printed;
    if (text == "rederived")
        return Derivation::rederived;
    throw ValidationError({"unknown path '" + text + "' (printed, rederived)"});
}

// Writes to a file, or stdout when path is empty or "-".
void emit(const CsvTable &table, const std::string &path) {
    if (path.empty() || path == "-")
        std::cout << table.str();
    else
        table.write(path);
}

struct Options {
    std::string config;
    std::string engine;
    std::string out;
    bool svg = false;
    int jobs = default_jobs();
    std::string figure;
    std::string preset = "small";
    bool no_exact = false;
    std::string scheme = "hd";
    std::string path = "rederived";
};

int cmd_figure(const Options &o) {
    const std::string out = o.out.empty() ? "." : o.out;
    const auto written =
        emit_figure(o.figure, out, o.jobs, o.svg,
                    o.config.empty() ? std::nullopt
                                     : std::optional<std::string>(o.config));
    for (const auto &p : written)
        std::cerr << "wrote " << p << "\n";
    return 0;
}

int cmd_sweep(const Options &o) {
    SweepSpec spec = sweep_from_document(load_config_file(o.config), "sweep");
    if (!o.engine.empty())
        spec.engine = engine_or_throw(o.engine);
    const CsvTable table = run_sweep(spec, o.jobs);
    emit(table, o.out);
    if (o.svg && !o.out.empty() && o.out != "-") {
        std::vector<double> x;
        PlotSeries s{spec.columns.front().label, {}};
        for (const auto &r : table.rows()) {
            x.push_back(std::stod(r[0]));
            const auto &cell = r[spec.axis2 ? 2 : 1];
            s.y.push_back(cell.empty() ? std::nan("") : std::stod(cell));
        }
        const auto svg_path =
            std::filesystem::path(o.out).replace_extension(".svg").string();
        if (!spec.axis2)
            write_text_file(svg_path,
                            line_plot_svg(o.out, spec.axis1.name, x, {s}));
    }
    return 0;
}

int cmd_verify(const Options &o) {
    const auto preset = parse_preset(o.preset);
    if (!preset)
        throw ValidationError({"unknown preset '" + o.preset + "' (small, full)"});
    VerifyOptions vo;
    vo.preset = *preset;
    vo.jobs = o.jobs;
    vo.exact = !o.no_exact;
    const VerificationReport rep = run_verification(vo);
    emit(rep.table, o.out);
    std::cerr << "verify " << o.preset << ": " << rep.points
              << " points, worst linearized delta "
              << format_double(rep.worst_linearized) << " -> "
              << (rep.pass ? "PASS" : "FAIL") << "\n";
    return rep.pass ? 0 : 1;
}

int cmd_optimum(const Options &o) {
    const InterferometerConfig cfg =
        config_from_document(load_config_file(o.config));
    const auto scheme = parse_scheme(o.scheme);
    if (!scheme)
        throw ValidationError({"unknown scheme '" + o.scheme + "' (si, hd)"});
    const PhaseOptimum best = find_optimum_phi(cfg, *scheme, path_or_throw(o.path));
    CsvTable t({"scheme", "phi_star", "delta_phi_star"});
    t.add_row({std::string(to_string(*scheme)), format_double(best.phi),
               format_double(best.delta_phi)});
    emit(t, o.out);
    return 0;
}

int cmd_moments(const Options &o) {
    const InterferometerConfig cfg =
        config_from_document(load_config_file(o.config));
    const Engine engine = o.engine.empty() ? Engine::analytic
                                           : engine_or_throw(o.engine);
    MomentSet m;
    if (engine == Engine::analytic) {
        validate_for_analytic(cfg);
        m = cfg.lossless() ? lossless_moments(cfg)
                           : lossy_moments(cfg, path_or_throw(o.path));
    } else {
        m = simulate(cfg, engine == Engine::oracle_exact
                              ? KerrVariant::exact
                              : KerrVariant::linearized)
                .moments;
    }
    CsvTable t({"moment", "re", "im"});
    auto row = [&](const char *name, complex v) {
        t.add_row({name, format_double(v.real()), format_double(v.imag())});
    };
    row("m1", m.m1);
    row("m2", m.m2);
    row("n1", m.n1);
    if (cfg.lossless() || engine != Engine::analytic)
        row("n2", m.n2);
    emit(t, o.out);
    return 0;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Kerr-seeded SU(1,1) interferometer phase-sensitivity engine"};
    app.require_subcommand(1);
    Options o;

    auto *figure = app.add_subcommand("figure", "reproduce one figure as CSV");
    figure->add_option("name", o.figure, "figure name")
        ->required()
        ->check(CLI::IsMember(figure_names()));
    figure->add_option("--out", o.out, "output directory");
    figure->add_option("--config", o.config, "replace the built-in preset");
    figure->add_flag("--svg", o.svg, "also write an SVG plot");
    figure->add_option("--jobs", o.jobs, "worker threads")->check(CLI::PositiveNumber);

    auto *sweep = app.add_subcommand("sweep", "run a [sweep] config");
    sweep->add_option("--config", o.config, "config file")->required();
    sweep->add_option("--engine", o.engine, "analytic|oracle-exact|oracle-linearized");
    sweep->add_option("--out", o.out, "output CSV (default stdout)");
    sweep->add_flag("--svg", o.svg, "also write an SVG next to --out");
    sweep->add_option("--jobs", o.jobs, "worker threads")->check(CLI::PositiveNumber);

    auto *verify = app.add_subcommand("verify", "closed forms against the oracle");
    verify->add_option("--preset", o.preset, "small|full");
    verify->add_option("--out", o.out, "output CSV (default stdout)");
    verify->add_option("--jobs", o.jobs, "worker threads")->check(CLI::PositiveNumber);
    verify->add_flag("--no-exact", o.no_exact, "skip the exact-Kerr oracle");

    auto *optimum = app.add_subcommand("optimum", "minimize the sensitivity over phi");
    optimum->add_option("--config", o.config, "config file")->required();
    optimum->add_option("--scheme", o.scheme, "si|hd");
    optimum->add_option("--path", o.path, "lossy HD path: printed|rederived");
    optimum->add_option("--out", o.out, "output CSV (default stdout)");

    auto *moments = app.add_subcommand("moments", "output moments for one config");
    moments->add_option("--config", o.config, "config file")->required();
    moments->add_option("--engine", o.engine, "analytic|oracle-exact|oracle-linearized");
    moments->add_option("--path", o.path, "lossy second moment: printed|rederived");
    moments->add_option("--out", o.out, "output CSV (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kExitInvalid;
    }

    try {
        if (*figure)
            return cmd_figure(o);
        if (*sweep)
            return cmd_sweep(o);
        if (*verify)
            return cmd_verify(o);
        if (*optimum)
            return cmd_optimum(o);
        return cmd_moments(o);
    } catch (const TruncationError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitTruncation;
    } catch (const IoError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const Error &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalid;
    }
}
