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
 * Sum-phase quantum Fisher information and the quantum Cramer-Rao bound.
 */
#pragma once

#include "kerrsu/analytic_moments.hpp"

namespace kerrsu {

/**
 * F_Q = 4 (V1 V2 - C^2) / (V1 + V2 - 2 C) for photon-number statistics of the
 * two internal modes. Throws DegenerateStatisticsError when the denominator
 * vanishes.
 */
double qfi_from_number_stats(const NumberStats &stats);

/// 1 / sqrt(fq).
double qcrb(double fq);

/**
 * (1/2) sqrt((V1 + V2 - 2C) / (V1 V2 - C^2)) with the internal statistics of
 * a Kerr seed. Defaults to the re-derived statistics.
 */
double qcrb_kerr_seed(double alpha, double gamma, double r1,
                      Derivation d = Derivation::rederived);

/// The same bound for a plain coherent seed (gamma = 0).
double qcrb_coherent_seed(double alpha, double r1);

/// qcrb_kerr_seed for a full configuration; lossy configurations are refused.
double qcrb_for_config(const InterferometerConfig &cfg,
                       Derivation d = Derivation::rederived);

} // namespace kerrsu
