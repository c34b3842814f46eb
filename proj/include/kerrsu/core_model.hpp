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
 * Value types describing one operating point of a Kerr-seeded SU(1,1)
 * interferometer, and the results computed from it.
 */
#pragma once

#include <complex>
#include <numbers>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kerrsu/errors.hpp"

namespace kerrsu {

using complex = std::complex<double>;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Analytic expressions are only trusted inside the linearization regime.
inline constexpr double kGammaCeiling = 1e-3;
/// Hyperbolic factors are evaluated directly; squeezing above this is refused.
inline constexpr double kSqueezingCeiling = 10.0;

/**
 * All physical parameters of one experiment point.
 *
 * Angles are radians and stored unreduced; use canonical() for comparisons.
 * Transmissivities mu (between the OPAs) and eta (before the detector) equal
 * one in the lossless case.
 */
struct InterferometerConfig {
    double alpha = 0.0;  ///< real coherent amplitude of the seed
    double gamma = 0.0;  ///< Kerr interaction coefficient
    double r1 = 0.0;     ///< OPA-1 squeezing amplitude
    double r2 = 0.0;     ///< OPA-2 squeezing amplitude
    double theta1 = 0.0; ///< OPA-1 phase
    double theta2 = kPi; ///< OPA-2 phase
    double phi = 0.0;    ///< phase to be estimated
    double mu = 1.0;     ///< internal transmissivity
    double eta = 1.0;    ///< external transmissivity

    [[nodiscard]] bool lossless() const noexcept {
        return mu == 1.0 && eta == 1.0;
    }
    /// Same point with every angle reduced into [0, 2pi).
    [[nodiscard]] InterferometerConfig canonical() const;

    bool operator==(const InterferometerConfig &) const = default;
};

/// Field names in declaration order; shared by config files and sweep axes.
const std::vector<std::string_view> &config_field_names();
/// Mutable access by field name; nullptr for unknown names.
double *config_field(InterferometerConfig &cfg, std::string_view name);
double config_field_value(const InterferometerConfig &cfg,
                          std::string_view name);

double reduce_angle(double angle);

enum class DetectionScheme { si, hd };
std::string_view to_string(DetectionScheme scheme);
std::optional<DetectionScheme> parse_scheme(std::string_view text);

/// Complex moments <d>, <d^2>, <d^dag d>, <d^dag^2 d^2> of one output mode.
struct MomentSet {
    complex m1{};
    complex m2{};
    complex n1{};
    complex n2{};
};

/// Photon-number variances and covariance of the two modes leaving OPA-1.
struct NumberStats {
    double var1 = 0.0;
    double var2 = 0.0;
    double cov = 0.0;
};

enum class ResultSource { analytic, oracle };

struct SensitivityResult {
    double delta_phi = 0.0;
    DetectionScheme scheme = DetectionScheme::hd;
    double derivative_mag = 0.0;
    ResultSource source = ResultSource::analytic;
};

/// chi3 * length / velocity.
double kerr_gamma(double chi3, double length, double velocity);

/**
 * Checks every field range and returns cfg unchanged. On failure throws a
 * ValidationError listing every violated constraint, not just the first.
 */
InterferometerConfig validate_config(const InterferometerConfig &cfg);

/// Validation that also enforces the analytic-path ceiling on gamma.
InterferometerConfig validate_for_analytic(const InterferometerConfig &cfg);

} // namespace kerrsu
