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

#include "kerrsu/sensitivity.hpp"

#include <cmath>
#include <limits>

namespace kerrsu {

namespace {

constexpr int kScanPoints = 2000;
constexpr double kPhiTolerance = 1e-6;

// Rounding can push a zero variance slightly negative; anything clearly
// negative means the closed forms are being used outside their validity.
double checked_std_dev(double variance, double scale) {
    if (variance < 0.0) {
        if (variance > -1e-10 * (1.0 + scale))
            return 0.0;
        throw DomainError("outside linearization validity: negative variance");
    }
    return std::sqrt(variance);
}

} // namespace

double error_propagation(double std_dev_A, double dA_dphi) {
    if (!(std_dev_A >= 0.0))
        throw DomainError("error_propagation: negative standard deviation");
    const double d = std::abs(dA_dphi);
    if (d == 0.0 || d < kStationaryRatio * std_dev_A)
        throw StationaryPointError();
    return std_dev_A / d;
}

SensitivityResult si_from_moments(const MomentSet &m, double dn1_dphi,
                                  ResultSource source) {
    const double n1 = m.n1.real(), n2 = m.n2.real();
    const double var = n2 + n1 - n1 * n1;
    SensitivityResult r;
    r.scheme = DetectionScheme::si;
    r.source = source;
    r.derivative_mag = std::abs(dn1_dphi);
    r.delta_phi =
        error_propagation(checked_std_dev(var, n2 + n1 * n1), dn1_dphi);
    return r;
}

SensitivityResult hd_from_moments(const MomentSet &m, complex dm1_dphi,
                                  ResultSource source, double norm) {
    // <A> = norm (m1 + conj m1), <A^2> = norm^2 (2 Re m2 + 2 n1 + 1)
    const double mean = norm * 2.0 * m.m1.real();
    const double second =
        norm * norm * (2.0 * m.m2.real() + 2.0 * m.n1.real() + 1.0);
    const double dA = norm * 2.0 * dm1_dphi.real();
    SensitivityResult r;
    r.scheme = DetectionScheme::hd;
    r.source = source;
    r.derivative_mag = std::abs(dA);
    r.delta_phi = error_propagation(
        checked_std_dev(second - mean * mean, second + mean * mean), dA);
    return r;
}

SensitivityResult phase_sensitivity_si(const InterferometerConfig &cfg) {
    const MomentSet m = lossless_moments(cfg);
    return si_from_moments(m, number_moment_dphi(cfg), ResultSource::analytic);
}

SensitivityResult phase_sensitivity_hd(const InterferometerConfig &cfg) {
    const MomentSet m = lossless_moments(cfg);
    return hd_from_moments(m, first_moment_dphi(cfg), ResultSource::analytic);
}

SensitivityResult phase_sensitivity_hd_lossy(const InterferometerConfig &cfg,
                                             Derivation d) {
    const MomentSet m = lossy_moments(cfg, d);
    return hd_from_moments(m, first_moment_dphi(cfg), ResultSource::analytic);
}

SensitivityResult phase_sensitivity(const InterferometerConfig &cfg,
                                    DetectionScheme scheme,
                                    Derivation lossy_path) {
    if (scheme == DetectionScheme::si)
        return phase_sensitivity_si(cfg);
    if (cfg.lossless())
        return phase_sensitivity_hd(cfg);
    return phase_sensitivity_hd_lossy(cfg, lossy_path);
}

double snl(double n) {
    if (!(n > 0.0))
        throw DomainError("snl: photon number must be positive");
    return 1.0 / std::sqrt(n);
}

double hl(double n) {
    if (!(n > 0.0))
        throw DomainError("hl: photon number must be positive");
    return 1.0 / n;
}

PhaseOptimum minimize_over_phi(const std::function<double(double)> &objective) {
    const double step = kTwoPi / kScanPoints;
    int best = -1;
    double best_val = std::numeric_limits<double>::infinity();
    double worst_val = -std::numeric_limits<double>::infinity();
    for (int k = 0; k < kScanPoints; ++k) {
        const double v = objective(k * step);
        if (!std::isfinite(v))
            continue;
        if (v < best_val) {
            best_val = v;
            best = k;
        }
        worst_val = std::max(worst_val, v);
    }
    if (best < 0)
        throw DomainError("optimum: sensitivity undefined at every phase");
    if (worst_val - best_val <= 1e-12 * std::abs(best_val))
        throw DomainError("optimum: flat landscape, no preferred phase");

    auto f = [&](double x) {
        const double v = objective(x);
        return std::isfinite(v) ? v : std::numeric_limits<double>::infinity();
    };
    const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = (best - 1) * step, b = (best + 1) * step;
    double c = b - invphi * (b - a), d = a + invphi * (b - a);
    double fc = f(c), fd = f(d);
    while (b - a > kPhiTolerance) {
        if (fc < fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - invphi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + invphi * (b - a);
            fd = f(d);
        }
    }
    double x = 0.5 * (a + b);
    double fx = f(x);
    // keep the grid point if refinement wandered onto an undefined point
    if (!(fx <= best_val)) {
        x = best * step;
        fx = best_val;
    }
    return {reduce_angle(x), fx};
}

PhaseOptimum find_optimum_phi(const InterferometerConfig &cfg,
                              DetectionScheme scheme, Derivation lossy_path) {
    validate_for_analytic(cfg);
    if (scheme == DetectionScheme::si && !cfg.lossless())
        throw WrongOperationError(
            "intensity detection is only modelled for lossless configurations");
    return minimize_over_phi([&](double phi) {
        InterferometerConfig c = cfg;
        c.phi = phi;
        try {
            return phase_sensitivity(c, scheme, lossy_path).delta_phi;
        } catch (const StationaryPointError &) {
            return std::numeric_limits<double>::quiet_NaN();
        } catch (const DomainError &) {
            return std::numeric_limits<double>::quiet_NaN();
        }
    });
}

} // namespace kerrsu
