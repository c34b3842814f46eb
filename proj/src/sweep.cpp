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

#include "kerrsu/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <sstream>
#include <thread>

#include "kerrsu/fisher.hpp"
#include "kerrsu/fock_oracle.hpp"
#include "kerrsu/sensitivity.hpp"

namespace kerrsu {

namespace {

std::vector<std::string> split_ws(std::string_view s) {
    std::vector<std::string> out;
    std::istringstream in{std::string(s)};
    std::string tok;
    while (in >> tok)
        out.push_back(tok);
    return out;
}

KerrVariant variant_of(Engine e) {
    return e == Engine::oracle_exact ? KerrVariant::exact
                                     : KerrVariant::linearized;
}

double oracle_qcrb(const InterferometerConfig &cfg, Engine e) {
    if (!cfg.lossless())
        throw WrongOperationError(
            "quantum Cramer-Rao bound is only defined for lossless "
            "configurations");
    return qcrb(qfi_from_number_stats(simulate(cfg, variant_of(e)).internal));
}

double oracle_seed_photons(InterferometerConfig cfg, Engine e) {
    cfg.r1 = cfg.r2 = 0.0;
    cfg.theta1 = cfg.theta2 = cfg.phi = 0.0;
    cfg.mu = cfg.eta = 1.0;
    return simulate(cfg, variant_of(e)).moments.n1.real();
}

double evaluate_or_throw(InterferometerConfig c, Quantity q, Derivation path,
                         Engine engine) {
    if (engine == Engine::analytic) {
        switch (q) {
        case Quantity::delta_phi_si:
            return phase_sensitivity_si(c).delta_phi;
        case Quantity::delta_phi_hd:
            return phase_sensitivity_hd(c).delta_phi;
        case Quantity::delta_phi_hd_lossy:
            return phase_sensitivity_hd_lossy(c, path).delta_phi;
        case Quantity::qcrb_kerr:
            return qcrb_for_config(c);
        case Quantity::qcrb_coherent:
            c.gamma = 0.0;
            return qcrb_for_config(c);
        case Quantity::n_kerr:
            validate_for_analytic(c);
            return mean_photon_kerr(c.alpha, c.gamma);
        case Quantity::n_cs:
            validate_for_analytic(c);
            return c.alpha * c.alpha;
        }
    }
    const KerrVariant v = variant_of(engine);
    switch (q) {
    case Quantity::delta_phi_si:
        if (!c.lossless())
            throw WrongOperationError(
                "delta_phi_si needs a lossless configuration");
        return oracle_phase_sensitivity(c, DetectionScheme::si, v, kOracleStep)
            .delta_phi;
    case Quantity::delta_phi_hd:
        if (!c.lossless())
            throw WrongOperationError(
                "delta_phi_hd needs a lossless configuration; use "
                "delta_phi_hd_lossy");
        [[fallthrough]];
    case Quantity::delta_phi_hd_lossy:
        return oracle_phase_sensitivity(c, DetectionScheme::hd, v, kOracleStep)
            .delta_phi;
    case Quantity::qcrb_kerr:
        return oracle_qcrb(c, engine);
    case Quantity::qcrb_coherent:
        c.gamma = 0.0;
        return oracle_qcrb(c, engine);
    case Quantity::n_kerr:
        return oracle_seed_photons(c, engine);
    case Quantity::n_cs:
        c.gamma = 0.0;
        return oracle_seed_photons(c, engine);
    }
    throw ValidationError({"unhandled quantity"});
}

} // namespace

std::string_view to_string(Quantity q) {
    switch (q) {
    case Quantity::delta_phi_si:
        return "delta_phi_si";
    case Quantity::delta_phi_hd:
        return "delta_phi_hd";
    case Quantity::delta_phi_hd_lossy:
        return "delta_phi_hd_lossy";
    case Quantity::qcrb_kerr:
        return "qcrb_kerr";
    case Quantity::qcrb_coherent:
        return "qcrb_coherent";
    case Quantity::n_kerr:
        return "n_kerr";
    case Quantity::n_cs:
        return "n_cs";
    }
    return "?";
}

std::optional<Quantity> parse_quantity(std::string_view text) {
    for (auto q : {Quantity::delta_phi_si, Quantity::delta_phi_hd,
                   Quantity::delta_phi_hd_lossy, Quantity::qcrb_kerr,
                   Quantity::qcrb_coherent, Quantity::n_kerr, Quantity::n_cs})
        if (to_string(q) == text)
            return q;
    return std::nullopt;
}

bool may_be_undefined(Quantity q) {
    return q != Quantity::n_kerr && q != Quantity::n_cs;
}

std::string_view to_string(Engine e) {
    switch (e) {
    case Engine::analytic:
        return "analytic";
    case Engine::oracle_exact:
        return "oracle-exact";
    case Engine::oracle_linearized:
        return "oracle-linearized";
    }
    return "?";
}

std::optional<Engine> parse_engine(std::string_view text) {
    if (text == "analytic")
        return Engine::analytic;
    if (text == "oracle-exact" || text == "oracle_exact")
        return Engine::oracle_exact;
    if (text == "oracle-linearized" || text == "oracle_linearized")
        return Engine::oracle_linearized;
    return std::nullopt;
}

double Axis::value(int i) const {
    if (open)
        return start + (stop - start) * i / count;
    if (i == count - 1)
        return stop;
    return start + (stop - start) * i / (count - 1);
}

Axis parse_axis(std::string_view text) {
    const auto tok = split_ws(text);
    if (tok.size() != 4 && tok.size() != 5)
        throw ValidationError(
            {"axis must read 'name start stop count [open]': '" +
             std::string(text) + "'"});
    Axis a;
    a.name = tok[0];
    a.start = parse_number(tok[1]);
    a.stop = parse_number(tok[2]);
    const double count = parse_number(tok[3]);
    if (count != std::floor(count) || count < 2 || count > 1e7)
        throw ValidationError({"axis count must be an integer >= 2"});
    a.count = static_cast<int>(count);
    if (tok.size() == 5) {
        if (tok[4] != "open")
            throw ValidationError({"unknown axis option '" + tok[4] + "'"});
        a.open = true;
    }
    return a;
}

ColumnSpec parse_column(std::string_view text) {
    const auto colon = text.find(':');
    if (colon == std::string_view::npos)
        throw ValidationError(
            {"column must read 'label: quantity [key=value ...]'"});
    ColumnSpec c;
    const auto label = split_ws(text.substr(0, colon));
    if (label.size() != 1)
        throw ValidationError({"column label must be one word"});
    c.label = label[0];
    const auto tok = split_ws(text.substr(colon + 1));
    if (tok.empty())
        throw ValidationError({"column '" + c.label + "' has no quantity"});
    const auto q = parse_quantity(tok[0]);
    if (!q)
        throw ValidationError({"unknown quantity '" + tok[0] + "'"});
    c.quantity = *q;
    for (std::size_t i = 1; i < tok.size(); ++i) {
        const auto eq = tok[i].find('=');
        if (eq == std::string::npos)
            throw ValidationError({"expected key=value, got '" + tok[i] + "'"});
        const std::string key = tok[i].substr(0, eq);
        const std::string val = tok[i].substr(eq + 1);
        if (key == "path") {
            if (val == "printed")
                c.lossy_path = Derivation::printed;
            else if (val == "rederived")
                c.lossy_path = Derivation::rederived;
            else
                throw ValidationError({"path must be printed or rederived"});
            continue;
        }
        InterferometerConfig probe;
        if (!config_field(probe, key))
            throw ValidationError({"unknown parameter '" + key + "'"});
        c.overrides.emplace_back(key, parse_number(val));
    }
    return c;
}

void validate_sweep(const SweepSpec &spec) {
    std::vector<std::string> problems;
    InterferometerConfig probe;
    std::vector<const Axis *> axes = {&spec.axis1};
    if (spec.axis2)
        axes.push_back(&*spec.axis2);
    for (const Axis *a : axes) {
        if (!config_field(probe, a->name))
            problems.push_back("unknown axis parameter '" + a->name + "'");
        if (a->count < 2)
            problems.push_back("axis '" + a->name + "' needs count >= 2");
        if (!std::isfinite(a->start) || !std::isfinite(a->stop))
            problems.push_back("axis '" + a->name + "' bounds not finite");
    }
    if (spec.axis2 && spec.axis2->name == spec.axis1.name)
        problems.emplace_back("both axes sweep the same parameter");
    if (spec.columns.empty())
        problems.emplace_back("no quantity to evaluate");
    for (std::size_t i = 0; i < spec.columns.size(); ++i)
        for (std::size_t j = 0; j < i; ++j)
            if (spec.columns[i].label == spec.columns[j].label)
                problems.push_back("duplicate column label '" +
                                   spec.columns[i].label + "'");
    if (spec.engine != Engine::analytic) {
        double max_alpha = spec.base.alpha;
        for (const Axis *a : axes)
            if (a->name == "alpha")
                max_alpha = std::max({max_alpha, a->start, a->stop});
        for (const auto &c : spec.columns)
            for (const auto &[k, v] : c.overrides)
                if (k == "alpha")
                    max_alpha = std::max(max_alpha, v);
        if (max_alpha > kOracleAlphaCeiling)
            problems.emplace_back(
                "oracle engines need alpha <= 3 (Fock truncation infeasible)");
    }
    if (!problems.empty())
        throw ValidationError(std::move(problems));
}

std::optional<double> evaluate_quantity(const InterferometerConfig &cfg,
                                        const ColumnSpec &column,
                                        Engine engine) {
    InterferometerConfig c = cfg;
    for (const auto &[k, v] : column.overrides)
        *config_field(c, k) = v;
    validate_config(c);
    try {
        return evaluate_or_throw(c, column.quantity, column.lossy_path, engine);
    } catch (const StationaryPointError &) {
        return std::nullopt;
    } catch (const DegenerateStatisticsError &) {
        return std::nullopt;
    } catch (const DomainError &) {
        return std::nullopt;
    }
}

CsvTable run_sweep(const SweepSpec &spec, int jobs) {
    validate_sweep(spec);
    const int n1 = spec.axis1.count;
    const int n2 = spec.axis2 ? spec.axis2->count : 1;
    const std::size_t points = static_cast<std::size_t>(n1) * n2;
    const std::size_t ncol = spec.columns.size();

    std::vector<std::optional<double>> values(points * ncol);
    std::vector<std::exception_ptr> errors(points);
    std::atomic<std::size_t> next{0};

    auto worker = [&] {
        for (std::size_t p = next++; p < points; p = next++) {
            try {
                InterferometerConfig c = spec.base;
                *config_field(c, spec.axis1.name) =
                    spec.axis1.value(static_cast<int>(p / n2));
                if (spec.axis2)
                    *config_field(c, spec.axis2->name) =
                        spec.axis2->value(static_cast<int>(p % n2));
                for (std::size_t k = 0; k < ncol; ++k)
                    values[p * ncol + k] =
                        evaluate_quantity(c, spec.columns[k], spec.engine);
            } catch (...) {
                errors[p] = std::current_exception();
            }
        }
    };
    const int nthreads =
        std::max(1, std::min<int>(jobs, static_cast<int>(points)));
    {
        std::vector<std::jthread> pool;
        for (int t = 1; t < nthreads; ++t)
            pool.emplace_back(worker);
        worker();
    }
    // report the first failing point in row order, independent of timing
    for (const auto &e : errors)
        if (e)
            std::rethrow_exception(e);

    std::vector<std::string> header = {spec.axis1.name};
    if (spec.axis2)
        header.push_back(spec.axis2->name);
    for (const auto &c : spec.columns) {
        header.push_back(c.label);
        if (may_be_undefined(c.quantity))
            header.push_back(c.label + "_undefined");
    }
    if (spec.engine_column)
        header.emplace_back("engine");
    CsvTable table(header);
    for (std::size_t p = 0; p < points; ++p) {
        std::vector<std::string> row = {
            format_double(spec.axis1.value(static_cast<int>(p / n2)))};
        if (spec.axis2)
            row.push_back(
                format_double(spec.axis2->value(static_cast<int>(p % n2))));
        for (std::size_t k = 0; k < ncol; ++k) {
            const auto &v = values[p * ncol + k];
            row.push_back(format_cell(v));
            if (may_be_undefined(spec.columns[k].quantity))
                row.emplace_back(v ? "0" : "1");
        }
        if (spec.engine_column)
            row.emplace_back(to_string(spec.engine));
        table.add_row(std::move(row));
    }
    return table;
}

SweepSpec sweep_from_document(const ConfigDocument &doc,
                              std::string_view section) {
    const ConfigSection *sec = doc.section(section);
    if (!sec)
        throw ValidationError({doc.source + ": missing [" +
                               std::string(section) + "] section"});
    SweepSpec spec;
    spec.base = config_from_document(doc);
    const bool is_sweep = section == "sweep";
    spec.engine_column = is_sweep;
    std::vector<std::string> problems;
    bool have_axis1 = false;
    std::optional<Quantity> quantity;
    Derivation path = Derivation::printed;
    for (const auto &e : sec->entries) {
        const std::string at =
            doc.source + ":" + std::to_string(e.line) + ": ";
        try {
            if (e.key == "axis1") {
                spec.axis1 = parse_axis(e.value);
                have_axis1 = true;
            } else if (e.key == "axis2") {
                spec.axis2 = parse_axis(e.value);
            } else if (e.key == "engine") {
                const auto eng = parse_engine(e.value);
                if (!eng)
                    throw ValidationError({"unknown engine '" + e.value + "'"});
                spec.engine = *eng;
            } else if (is_sweep && e.key == "quantity") {
                quantity = parse_quantity(e.value);
                if (!quantity)
                    throw ValidationError(
                        {"unknown quantity '" + e.value + "'"});
            } else if (is_sweep && e.key == "path") {
                if (e.value == "printed")
                    path = Derivation::printed;
                else if (e.value == "rederived")
                    path = Derivation::rederived;
                else
                    throw ValidationError(
                        {"path must be printed or rederived"});
            } else if (!is_sweep && e.key == "column") {
                spec.columns.push_back(parse_column(e.value));
            } else if (!is_sweep && e.key == "name") {
                // informational
            } else {
                throw ValidationError({"unknown key '" + e.key + "' in [" +
                                       std::string(section) + "]"});
            }
        } catch (const ValidationError &err) {
            for (const auto &p : err.problems())
                problems.push_back(at + p);
        }
    }
    if (!have_axis1)
        problems.push_back(doc.source + ": [" + std::string(section) +
                           "] needs axis1");
    if (is_sweep) {
        if (!quantity)
            problems.push_back(doc.source + ": [sweep] needs quantity");
        else
            spec.columns.push_back(
                {std::string(to_string(*quantity)), *quantity, {}, path});
    }
    if (!problems.empty())
        throw ValidationError(std::move(problems));
    validate_sweep(spec);
    return spec;
}

} // namespace kerrsu
