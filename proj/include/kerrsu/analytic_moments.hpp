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
 * Closed-form output moments of the linearized Kerr-seeded SU(1,1)
 * interferometer.
 *
 * The seed mode after the Kerr medium is represented by the linearized
 * operator K = (1 - 2i gamma n) a acting on a real coherent state. The
 * lossless output operator is d = c1 K + c2 a2^dag with
 *
 *   c1 = e^{i phi} ch1 ch2 + e^{i(theta2 - theta1)} sh1 sh2
 *   c2 = e^{i(phi + theta1)} sh1 ch2 + e^{i theta2} ch1 sh2
 *
 * Loss is modelled by equal transmissivity mu on both internal arms and eta on
 * the detected output, so f = sqrt(eta mu) d + vacuum noise.
 *
 * Several published closed forms disagree with this operator model. Where that
 * happens the function takes a Derivation flag: `printed` evaluates the
 * published expression verbatim, `rederived` evaluates the form that agrees
 * with the Fock-space oracle.
 */
#pragma once

#include "kerrsu/core_model.hpp"

namespace kerrsu {

enum class Derivation { printed, rederived };
std::string_view to_string(Derivation d);

/// alpha^2 + 4 alpha^4 (1 + alpha^2) gamma^2.
double mean_photon_kerr(double alpha, double gamma);

/**
 * Moments of the linearized Kerr operator K in the coherent state |alpha>,
 * frozen as polynomials in lambda = alpha^2.
 */
struct KerrSeedMoments {
    double alpha = 0.0;
    double lambda = 0.0;
    complex k1;        ///< <K>
    complex k2;        ///< <K^2>
    double n = 0.0;    ///< <K^dag K>
    double nbar = 0.0; ///< <K K^dag>
    double n2 = 0.0;   ///< <K^dag^2 K^2>

    static KerrSeedMoments of(double alpha, double gamma);
};

/// The two Bogoliubov coefficients of the output operator.
struct ChainCoefficients {
    complex c1;
    complex c2;
};
ChainCoefficients chain_coefficients(const InterferometerConfig &cfg);

/// Sum phase theta1 - theta2 + phi.
inline double sum_phase(const InterferometerConfig &cfg) {
    return cfg.theta1 - cfg.theta2 + cfg.phi;
}

complex lossless_first_moment(const InterferometerConfig &cfg);
complex lossless_second_moment(const InterferometerConfig &cfg);
/// `printed` keeps cos(phi) in the interference term; `rederived` uses
/// cos(theta1 - theta2 + phi).
double lossless_number_moment(const InterferometerConfig &cfg,
                              Derivation d = Derivation::rederived);
double lossless_fourth_moment(const InterferometerConfig &cfg);
MomentSet lossless_moments(const InterferometerConfig &cfg);

complex lossy_first_moment(const InterferometerConfig &cfg);
/// `printed` is the published expression; `rederived` is eta mu <d^2>.
complex lossy_second_moment(const InterferometerConfig &cfg,
                            Derivation d = Derivation::printed);
double lossy_number_moment(const InterferometerConfig &cfg);
/// m1, m2, n1 of the detected mode. n2 is left zero; no closed form is used.
MomentSet lossy_moments(const InterferometerConfig &cfg,
                        Derivation d = Derivation::printed);

/// d<d>/dphi (lossless) or d<f>/dphi (lossy, the sqrt(eta mu) factor applied).
complex first_moment_dphi(const InterferometerConfig &cfg);
/// d<d^dag d>/dphi for the lossless chain.
double number_moment_dphi(const InterferometerConfig &cfg,
                          Derivation d = Derivation::rederived);

struct InternalNumberStatsInputs {
    double alpha = 0.0;
    double gamma = 0.0;
    double r1 = 0.0;
};

/**
 * Photon-number variances and covariance of the two modes leaving OPA-1.
 * `printed` evaluates the published statistics, reading the display labelled
 * as the squared covariance as the covariance itself.
 */
NumberStats internal_number_stats(const InternalNumberStatsInputs &in,
                                  Derivation d = Derivation::rederived);

} // namespace kerrsu
