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

#include "kerrsu/fisher.hpp"

#include <cmath>

namespace kerrsu {

double qfi_from_number_stats(const NumberStats &s) {
    const double denom = s.var1 + s.var2 - 2.0 * s.cov;
    if (!(std::abs(denom) > 0.0) || !std::isfinite(denom))
        throw DegenerateStatisticsError("var1 + var2 - 2 cov vanishes");
    return 4.0 * (s.var1 * s.var2 - s.cov * s.cov) / denom;
}

double qcrb(double fq) {
    if (!(fq > 0.0))
        throw DomainError("qcrb: Fisher information must be positive");
    return 1.0 / std::sqrt(fq);
}

double qcrb_kerr_seed(double alpha, double gamma, double r1, Derivation d) {
    const NumberStats s = internal_number_stats({alpha, gamma, r1}, d);
    const double num = s.var1 + s.var2 - 2.0 * s.cov;
    const double det = s.var1 * s.var2 - s.cov * s.cov;
    if (!(det > 0.0))
        throw DegenerateStatisticsError("var1 var2 - cov^2 not positive");
    if (!(num > 0.0))
        throw DegenerateStatisticsError("var1 + var2 - 2 cov not positive");
    return 0.5 * std::sqrt(num / det);
}

double qcrb_coherent_seed(double alpha, double r1) {
    return qcrb_kerr_seed(alpha, 0.0, r1);
}

double qcrb_for_config(const InterferometerConfig &cfg, Derivation d) {
    validate_for_analytic(cfg);
    if (!cfg.lossless())
        throw WrongOperationError(
            "quantum Cramer-Rao bound is only defined for lossless "
            "configurations");
    return qcrb_kerr_seed(cfg.alpha, cfg.gamma, cfg.r1, d);
}

} // namespace kerrsu
