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

#include "kerrsu/verify.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "kerrsu/analytic_moments.hpp"
#include "kerrsu/fock_oracle.hpp"

namespace kerrsu {

namespace {

struct Row {
    std::string section;
    std::string quantity;
    complex analytic;
    complex linearized;
    std::optional<complex> exact;
    std::string note;
};

struct PointResult {
    std::vector<Row> rows;
};

PointResult verify_point(const InterferometerConfig &cfg, bool with_exact) {
    const OracleResult lin = simulate(cfg, KerrVariant::linearized);
    std::optional<OracleResult> ex;
    std::string exact_note = with_exact ? "" : "skipped";
    if (with_exact) {
        try {
            ex = simulate(cfg, KerrVariant::exact);
        } catch (const TruncationError &e) {
            exact_note = std::string("infeasible: ") + e.what();
        }
    }
    auto exm = [&](complex MomentSet::*f) -> std::optional<complex> {
        if (!ex)
            return std::nullopt;
        return (ex->moments).*f;
    };
    auto exs = [&](double NumberStats::*f) -> std::optional<complex> {
        if (!ex)
            return std::nullopt;
        return complex((ex->internal).*f);
    };

    PointResult out;
    auto add = [&](const char *section, const char *q, complex a, complex l,
                   std::optional<complex> e) {
        out.rows.push_back({section, q, a, l, e, exact_note});
    };
    if (cfg.lossless()) {
        const MomentSet a = lossless_moments(cfg);
        add("moment", "m1", a.m1, lin.moments.m1, exm(&MomentSet::m1));
        add("moment", "m2", a.m2, lin.moments.m2, exm(&MomentSet::m2));
        add("moment", "n1", a.n1, lin.moments.n1, exm(&MomentSet::n1));
        add("moment", "n2", a.n2, lin.moments.n2, exm(&MomentSet::n2));
        const NumberStats s =
            internal_number_stats({cfg.alpha, cfg.gamma, cfg.r1});
        add("moment", "var1", s.var1, lin.internal.var1,
            exs(&NumberStats::var1));
        add("moment", "var2", s.var2, lin.internal.var2,
            exs(&NumberStats::var2));
        add("moment", "cov", s.cov, lin.internal.cov, exs(&NumberStats::cov));

        add("paper_discrepancy", "n1_printed",
            lossless_number_moment(cfg, Derivation::printed), lin.moments.n1,
            exm(&MomentSet::n1));
        const NumberStats p = internal_number_stats(
            {cfg.alpha, cfg.gamma, cfg.r1}, Derivation::printed);
        add("paper_discrepancy", "var1_printed", p.var1, lin.internal.var1,
            exs(&NumberStats::var1));
        add("paper_discrepancy", "var2_printed", p.var2, lin.internal.var2,
            exs(&NumberStats::var2));
        add("paper_discrepancy", "cov_printed", p.cov, lin.internal.cov,
            exs(&NumberStats::cov));
    } else {
        add("moment", "m1", lossy_first_moment(cfg), lin.moments.m1,
            exm(&MomentSet::m1));
        add("moment", "m2", lossy_second_moment(cfg, Derivation::rederived),
            lin.moments.m2, exm(&MomentSet::m2));
        add("moment", "n1", lossy_number_moment(cfg), lin.moments.n1,
            exm(&MomentSet::n1));
        add("paper_discrepancy", "m2_printed",
            lossy_second_moment(cfg, Derivation::printed), lin.moments.m2,
            exm(&MomentSet::m2));
    }
    return out;
}

} // namespace

std::optional<VerifyPreset> parse_preset(std::string_view text) {
    if (text == "small")
        return VerifyPreset::small;
    if (text == "full")
        return VerifyPreset::full;
    return std::nullopt;
}

std::vector<InterferometerConfig> verification_grid(VerifyPreset preset) {
    const bool full = preset == VerifyPreset::full;
    const std::vector<double> alphas =
        full ? std::vector<double>{0.5, 1.0, 2.0} : std::vector<double>{0.5, 1.0};
    const std::vector<double> gammas =
        full ? std::vector<double>{0.0, 1e-4, 1e-3}
             : std::vector<double>{0.0, 1e-4};
    const std::vector<double> losses =
        full ? std::vector<double>{1.0, 0.7} : std::vector<double>{1.0};
    std::vector<InterferometerConfig> grid;
    for (double a : alphas)
        for (double g : gammas)
            for (double r : {0.3, 0.8})
                for (double phi : {0.1, 5.9})
                    for (double mu : losses)
                        for (double eta : losses) {
                            InterferometerConfig c;
                            c.alpha = a;
                            c.gamma = g;
                            c.r1 = c.r2 = r;
                            c.theta1 = 0.0;
                            c.theta2 = kPi;
                            c.phi = phi;
                            c.mu = mu;
                            c.eta = eta;
                            grid.push_back(c);
                        }
    return grid;
}

double relative_delta(complex a, complex b) {
    const double d = std::abs(a - b);
    const double s = std::abs(b);
    return s > 0.0 ? d / s : d;
}

VerificationReport run_verification(const VerifyOptions &opt) {
    const auto grid = verification_grid(opt.preset);
    std::vector<PointResult> results(grid.size());
    std::vector<std::exception_ptr> errors(grid.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < grid.size(); i = next++) {
            try {
                results[i] = verify_point(grid[i], opt.exact);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    {
        std::vector<std::jthread> pool;
        const int n = std::max(1, std::min<int>(opt.jobs, int(grid.size())));
        for (int t = 1; t < n; ++t)
            pool.emplace_back(worker);
        worker();
    }
    for (const auto &e : errors)
        if (e)
            std::rethrow_exception(e);

    VerificationReport rep;
    rep.points = grid.size();
    rep.table = CsvTable({"section", "point", "alpha", "gamma", "r1", "r2",
                          "phi", "mu", "eta", "quantity", "analytic_re",
                          "analytic_im", "linearized_re", "linearized_im",
                          "exact_re", "exact_im", "delta_linearized",
                          "delta_exact", "note"});
    auto emit_section = [&](const std::string &section) {
        for (std::size_t i = 0; i < grid.size(); ++i) {
            const auto &c = grid[i];
            for (const Row &r : results[i].rows) {
                if (r.section != section)
                    continue;
                const double dl = relative_delta(r.analytic, r.linearized);
                if (section == "moment")
                    rep.worst_linearized = std::max(rep.worst_linearized, dl);
                rep.table.add_row(
                    {section, std::to_string(i), format_double(c.alpha),
                     format_double(c.gamma), format_double(c.r1),
                     format_double(c.r2), format_double(c.phi),
                     format_double(c.mu), format_double(c.eta), r.quantity,
                     format_double(r.analytic.real()),
                     format_double(r.analytic.imag()),
                     format_double(r.linearized.real()),
                     format_double(r.linearized.imag()),
                     r.exact ? format_double(r.exact->real()) : "",
                     r.exact ? format_double(r.exact->imag()) : "",
                     format_double(dl),
                     r.exact ? format_double(relative_delta(r.analytic, *r.exact))
                             : "",
                     r.note});
            }
        }
    };
    emit_section("moment");
    emit_section("paper_discrepancy");
    rep.pass = rep.worst_linearized <= kVerifyThreshold;
    auto summary = [&](const std::string &q, const std::string &value,
                       const std::string &note) {
        std::vector<std::string> row(rep.table.header().size());
        row[0] = "summary";
        row[9] = q;
        row[10] = value;
        row[18] = note;
        rep.table.add_row(std::move(row));
    };
    summary("points", std::to_string(rep.points), "");
    summary("worst_delta_linearized", format_double(rep.worst_linearized),
            "threshold " + format_double(kVerifyThreshold));
    summary("status", "", rep.pass ? "PASS" : "FAIL");
    return rep;
}

} // namespace kerrsu
