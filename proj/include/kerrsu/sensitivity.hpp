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
 * Phase sensitivity by error propagation, for single-intensity and homodyne
 * detection of the output mode.
 */
#pragma once

#include <functional>

#include "kerrsu/analytic_moments.hpp"

namespace kerrsu {

/// A derivative below this fraction of the standard deviation is stationary.
inline constexpr double kStationaryRatio = 1e-12;

/**
 * std_dev_A / |dA_dphi|. Throws StationaryPointError when the derivative is
 * zero or smaller than kStationaryRatio * std_dev_A.
 */
double error_propagation(double std_dev_A, double dA_dphi);

/// Intensity observable from a moment set and d<n>/dphi.
SensitivityResult si_from_moments(const MomentSet &m, double dn1_dphi,
                                  ResultSource source);

/**
 * Quadrature observable norm * (d + d^dag) from a moment set and d<d>/dphi.
 * The result does not depend on norm; it is exposed so the convention can be
 * tested.
 */
SensitivityResult hd_from_moments(const MomentSet &m, complex dm1_dphi,
                                  ResultSource source, double norm = 1.0);

SensitivityResult phase_sensitivity_si(const InterferometerConfig &cfg);
SensitivityResult phase_sensitivity_hd(const InterferometerConfig &cfg);
/// `printed` uses the published lossy second moment verbatim.
SensitivityResult phase_sensitivity_hd_lossy(
    const InterferometerConfig &cfg, Derivation d = Derivation::printed);

/// Dispatches on scheme and, for HD, on whether cfg is lossy.
SensitivityResult phase_sensitivity(const InterferometerConfig &cfg,
                                    DetectionScheme scheme,
                                    Derivation lossy_path = Derivation::printed);

double snl(double n);
double hl(double n);

struct PhaseOptimum {
    double phi = 0.0;
    double delta_phi = 0.0;
};

/**
 * Minimizes objective(phi) over [0, 2pi): a 2000-point uniform scan, then
 * golden-section refinement to 1e-6 rad around the best grid point. The
 * objective returns NaN where the sensitivity is undefined. Throws DomainError
 * if no grid point is defined or the landscape is flat.
 */
PhaseOptimum minimize_over_phi(const std::function<double(double)> &objective);

PhaseOptimum find_optimum_phi(const InterferometerConfig &cfg,
                              DetectionScheme scheme,
                              Derivation lossy_path = Derivation::printed);

} // namespace kerrsu
