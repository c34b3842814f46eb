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

#include "kerrsu/analytic_moments.hpp"

#include <cmath>

namespace kerrsu {

namespace {

constexpr complex I{0.0, 1.0};

const InterferometerConfig &require_lossless(const InterferometerConfig &cfg,
                                             const char *lossy_name) {
    validate_for_analytic(cfg);
    if (!cfg.lossless())
        throw WrongOperationError(std::string("lossy configuration: use ") +
                                  lossy_name);
    return cfg;
}

// (1 + alpha^2)(1 + 4 alpha^4 gamma^2), i.e. <K^dag K> + 1.
double seed_weight(double alpha, double gamma) {
    const double l = alpha * alpha;
    return (1.0 + l) * (1.0 + 4.0 * l * l * gamma * gamma);
}

// cos(Phi/2) cosh(r1 + r2) + i cosh(r1 - r2) sin(Phi/2)
complex half_angle_factor(const InterferometerConfig &cfg) {
    const double h = 0.5 * sum_phase(cfg);
    return {std::cos(h) * std::cosh(cfg.r1 + cfg.r2),
            std::cosh(cfg.r1 - cfg.r2) * std::sin(h)};
}

// Common bracket of the first-moment displays.
complex first_moment_bracket(const InterferometerConfig &cfg) {
    const double dt = cfg.theta1 - cfg.theta2;
    return std::sinh(cfg.r1) * std::sinh(cfg.r2) *
               complex(std::cos(dt), -std::sin(dt)) +
           std::cosh(cfg.r1) * std::cosh(cfg.r2) *
               complex(std::cos(cfg.phi), std::sin(cfg.phi));
}

double number_moment_core(const InterferometerConfig &cfg, double cos_term) {
    const double a = cfg.alpha, g = cfg.gamma;
    const double w = seed_weight(a, g);
    const double ch2 = std::cosh(cfg.r2), sh2 = std::sinh(cfg.r2);
    const double c2r1 = std::cosh(2.0 * cfg.r1);
    return 0.5 * (-1.0 + a * a + 4.0 * std::pow(a, 4) * (1.0 + a * a) * g * g +
                  w * c2r1 * ch2 * ch2 + w * c2r1 * sh2 * sh2 +
                  w * cos_term * std::sinh(2.0 * cfg.r1) *
                      std::sinh(2.0 * cfg.r2));
}

} // namespace

std::string_view to_string(Derivation d) {
    return d == Derivation::printed ? "printed" : "rederived";
}

double mean_photon_kerr(double alpha, double gamma) {
    const double l = alpha * alpha;
    return l + 4.0 * l * l * (1.0 + l) * gamma * gamma;
}

KerrSeedMoments KerrSeedMoments::of(double alpha, double gamma) {
    KerrSeedMoments m;
    const double l = alpha * alpha, g = gamma, g2 = g * g;
    m.alpha = alpha;
    m.lambda = l;
    m.k1 = alpha * complex(1.0, -2.0 * g * l);
    m.k2 = l * complex(1.0 - 8.0 * g2 * l - 4.0 * g2 * l * l,
                       -2.0 * g - 4.0 * g * l);
    m.n = mean_photon_kerr(alpha, gamma);
    m.nbar = 1.0 + l + 4.0 * g2 * (l * l * l + 4.0 * l * l + 2.0 * l);
    const double l2 = l * l, l3 = l2 * l, l4 = l3 * l;
    m.n2 = l2 + g2 * (8.0 * l4 + 16.0 * l3 + 4.0 * l2) +
           g2 * g2 *
               (16.0 * l4 * l2 + 128.0 * l4 * l + 224.0 * l4 + 64.0 * l3);
    return m;
}

ChainCoefficients chain_coefficients(const InterferometerConfig &cfg) {
    const double ch1 = std::cosh(cfg.r1), sh1 = std::sinh(cfg.r1);
    const double ch2 = std::cosh(cfg.r2), sh2 = std::sinh(cfg.r2);
    ChainCoefficients c;
    c.c1 = std::exp(I * cfg.phi) * ch1 * ch2 +
           std::exp(I * (cfg.theta2 - cfg.theta1)) * sh1 * sh2;
    c.c2 = std::exp(I * (cfg.phi + cfg.theta1)) * sh1 * ch2 +
           std::exp(I * cfg.theta2) * ch1 * sh2;
    return c;
}

complex lossless_first_moment(const InterferometerConfig &cfg) {
    require_lossless(cfg, "lossy_first_moment");
    const double a = cfg.alpha;
    return a * complex(1.0, -2.0 * a * a * cfg.gamma) *
           first_moment_bracket(cfg);
}

complex lossless_second_moment(const InterferometerConfig &cfg) {
    require_lossless(cfg, "lossy_second_moment");
    const double a = cfg.alpha, g = cfg.gamma, l = a * a;
    const complex inner = -1.0 + 2.0 * I * g +
                          4.0 * l * g * (I + 2.0 * g + l * g);
    const complex x = half_angle_factor(cfg);
    return -0.125 * std::exp(-I * (cfg.theta1 - cfg.theta2 - cfg.phi)) *
           (8.0 * l * inner * x * x);
}

double lossless_number_moment(const InterferometerConfig &cfg, Derivation d) {
    require_lossless(cfg, "lossy_number_moment");
    const double angle = d == Derivation::printed ? cfg.phi : sum_phase(cfg);
    return number_moment_core(cfg, std::cos(angle));
}

double lossless_fourth_moment(const InterferometerConfig &cfg) {
    require_lossless(cfg, "lossy_moments");
    const auto k = KerrSeedMoments::of(cfg.alpha, cfg.gamma);
    const auto c = chain_coefficients(cfg);
    const double p1 = std::norm(c.c1), p2 = std::norm(c.c2);
    return p1 * p1 * k.n2 + 4.0 * p1 * p2 * k.n + 2.0 * p2 * p2;
}

MomentSet lossless_moments(const InterferometerConfig &cfg) {
    return {lossless_first_moment(cfg), lossless_second_moment(cfg),
            lossless_number_moment(cfg), lossless_fourth_moment(cfg)};
}

complex lossy_first_moment(const InterferometerConfig &cfg) {
    validate_for_analytic(cfg);
    const double a = cfg.alpha;
    return a * std::sqrt(cfg.eta) * std::sqrt(cfg.mu) *
           complex(1.0, -2.0 * a * a * cfg.gamma) * first_moment_bracket(cfg);
}

complex lossy_second_moment(const InterferometerConfig &cfg, Derivation d) {
    validate_for_analytic(cfg);
    const double a = cfg.alpha, g = cfg.gamma, l = a * a;
    const double mu = cfg.mu, eta = cfg.eta;
    const complex x = half_angle_factor(cfg);
    const complex pre = std::exp(-I * (cfg.theta1 - cfg.theta2 - cfg.phi));
    if (d == Derivation::rederived) {
        const complex inner = -1.0 + 2.0 * I * g +
                              4.0 * l * g * (I + 2.0 * g + l * g);
        return -eta * mu * pre * l * inner * x * x;
    }
    const complex inner =
        -1.0 + 2.0 * I * g + 4.0 * l * mu * g * (I + (2.0 + l) * g);
    const double s2 = std::sinh(2.0 * cfg.r2);
    const complex loss_terms =
        4.0 * std::exp(I * cfg.theta1) * (mu - 1.0) * std::cos(cfg.phi) * s2 +
        4.0 * (mu - 1.0) *
            complex(std::sin(cfg.theta1), -std::cos(cfg.theta1)) *
            std::sin(cfg.phi) * s2;
    return -0.125 * eta * pre * (8.0 * l * inner * x * x + loss_terms);
}

double lossy_number_moment(const InterferometerConfig &cfg) {
    validate_for_analytic(cfg);
    const double a = cfg.alpha, g = cfg.gamma, mu = cfg.mu;
    const double w = seed_weight(a, g);
    const double ch2 = std::cosh(cfg.r2), sh2 = std::sinh(cfg.r2);
    const double bracket = 1.0 - mu + w * mu * std::cosh(2.0 * cfg.r1);
    return 0.5 * cfg.eta *
           (-1.0 + a * a * mu + 4.0 * std::pow(a, 4) * (1.0 + a * a) * g * g * mu +
            bracket * ch2 * ch2 + bracket * sh2 * sh2 +
            w * mu * std::cos(sum_phase(cfg)) * std::sinh(2.0 * cfg.r1) *
                std::sinh(2.0 * cfg.r2));
}

MomentSet lossy_moments(const InterferometerConfig &cfg, Derivation d) {
    return {lossy_first_moment(cfg), lossy_second_moment(cfg, d),
            lossy_number_moment(cfg), 0.0};
}

complex first_moment_dphi(const InterferometerConfig &cfg) {
    validate_for_analytic(cfg);
    const double a = cfg.alpha;
    return std::sqrt(cfg.eta * cfg.mu) * a *
           complex(1.0, -2.0 * a * a * cfg.gamma) * std::cosh(cfg.r1) *
           std::cosh(cfg.r2) * I * std::exp(I * cfg.phi);
}

double number_moment_dphi(const InterferometerConfig &cfg, Derivation d) {
    require_lossless(cfg, "a lossy observable");
    const double angle = d == Derivation::printed ? cfg.phi : sum_phase(cfg);
    return -0.5 * seed_weight(cfg.alpha, cfg.gamma) * std::sin(angle) *
           std::sinh(2.0 * cfg.r1) * std::sinh(2.0 * cfg.r2);
}

NumberStats internal_number_stats(const InternalNumberStatsInputs &in,
                                  Derivation d) {
    InterferometerConfig probe;
    probe.alpha = in.alpha;
    probe.gamma = in.gamma;
    probe.r1 = in.r1;
    validate_for_analytic(probe);

    const double a = in.alpha, g = in.gamma, g2 = g * g, g4 = g2 * g2;
    const double ch = std::cosh(in.r1), sh = std::sinh(in.r1);
    NumberStats s;
    if (d == Derivation::printed) {
        const double a2 = a * a, a4 = a2 * a2, a6 = a4 * a2, a8 = a4 * a4,
                     a10 = a8 * a2;
        s.var1 = 0.5 * ch * ch *
                 (-1.0 + 4.0 * a4 * g2 + 208.0 * a8 * g4 + 96.0 * a10 * g4 +
                  8.0 * a6 * (g2 + 8.0 * g4) +
                  (1.0 + 2.0 * a2 + 12.0 * a4 * g2 + 208.0 * a8 * g4 +
                   96.0 * a10 * g4 + 16.0 * a6 * (g2 + 4.0 * g4)) *
                      std::cosh(2.0 * in.r1));
        s.var2 = sh * sh *
                 (1.0 + 16.0 * a4 * g2 + 4.0 * a6 * g2 + a2 * (1.0 + 8.0 * g2) +
                  (1.0 + 8.0 * g2 + 1664.0 * a8 * g4 + 192.0 * a10 * g4 +
                   4.0 * a4 * g2 * (37.0 + 752.0 * g2) +
                   40.0 * a6 * (g2 + 104.0 * g4) +
                   a2 * (2.0 + 96.0 * g2 + 384.0 * g4)) *
                      sh * sh);
        s.cov = (1.0 + 1280.0 * a8 * g4 + 192.0 * a10 * g4 +
                 4.0 * a4 * g2 * (25.0 + 272.0 * g2) +
                 8.0 * a6 * g2 * (5.0 + 288.0 * g2) +
                 a2 * (2.0 + 32.0 * g2 + 64.0 * g4)) *
                ch * ch * sh * sh;
    } else {
        // N = K^dag K = n + g^2 u and M = K K^dag = n + 1 + g^2 w with
        // u = 4n(n-1)^2, w = 4n^2(n+1); Poisson moments of n, u, w in lambda.
        const double l = a * a, l2 = l * l, l3 = l2 * l, l4 = l3 * l,
                     l5 = l4 * l;
        const double e_w = 4.0 * l3 + 16.0 * l2 + 8.0 * l;
        const double cov_nu = 12.0 * l3 + 8.0 * l2;
        const double cov_nw = 12.0 * l3 + 32.0 * l2 + 8.0 * l;
        const double var_u =
            144.0 * l5 + 480.0 * l4 + 352.0 * l3 + 32.0 * l2;
        const double var_w =
            144.0 * l5 + 1056.0 * l4 + 2080.0 * l3 + 1024.0 * l2 + 64.0 * l;
        const double cov_uw =
            144.0 * l5 + 768.0 * l4 + 928.0 * l3 + 192.0 * l2;
        const double var_n = l + 2.0 * g2 * cov_nu + g4 * var_u;
        const double var_m = l + 2.0 * g2 * cov_nw + g4 * var_w;
        const double cov_nm = l + g2 * (cov_nu + cov_nw) + g4 * cov_uw;
        const double e_m = l + 1.0 + g2 * e_w;
        const double c = ch * ch, s_ = sh * sh;
        s.var1 = c * c * var_n + c * s_ * e_m;
        s.var2 = s_ * s_ * var_m + c * s_ * e_m;
        s.cov = c * s_ * (cov_nm + e_m);
    }
    if (s.var1 < 0.0 || s.var2 < 0.0)
        throw DomainError("outside linearization validity");
    return s;
}

} // namespace kerrsu
