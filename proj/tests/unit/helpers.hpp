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

#pragma once

#include <doctest.h>

#include <cmath>
#include <complex>

#include "kerrsu/core_model.hpp"

namespace kerrsu::test {

inline double rel(complex a, complex b) {
    const double s = std::abs(b);
    return s > 0.0 ? std::abs(a - b) / s : std::abs(a - b);
}

#define CHECK_REL(a, b, tol) CHECK(::kerrsu::test::rel((a), (b)) <= (tol))

inline InterferometerConfig point(double alpha, double gamma, double r,
                                  double phi, double mu = 1.0,
                                  double eta = 1.0) {
    InterferometerConfig c;
    c.alpha = alpha;
    c.gamma = gamma;
    c.r1 = c.r2 = r;
    c.theta1 = 0.0;
    c.theta2 = kPi;
    c.phi = phi;
    c.mu = mu;
    c.eta = eta;
    return c;
}

/// alpha=1, gamma=1e-4, r1=r2=0.5, theta1=0, theta2=pi, phi=0.3.
inline InterferometerConfig reference_point() {
    return point(1.0, 1e-4, 0.5, 0.3);
}

/// alpha=100, r1=r2=2, theta1=0, theta2=pi.
inline InterferometerConfig figure_point(double gamma, double phi) {
    return point(100.0, gamma, 2.0, phi);
}

// Reference values below come from tools/reference_oracle: a Python
// Schrodinger-picture simulator with scipy exponentials and explicit loss
// ancillas, and a Heisenberg-picture linearized simulator on scipy sparse
// matrices. Neither shares code with the library.

// reference_point(), linearized Kerr seed
inline const complex kLinM1{0.9432836983777096, 0.3755772156694845};
inline const complex kLinM2{0.7488676010467676, 0.7084019848621014};
inline constexpr double kLinN1 = 1.0616847611103457;
inline constexpr double kLinN2 = 1.191713092904679;
inline constexpr double kLinVar1 = 2.3073644449669053;
inline constexpr double kLinVar2 = 0.764283240109131;
inline constexpr double kLinCov = 1.0358237294308936;

// reference_point(), exact Kerr seed
inline const complex kExactM1{0.9432836606468634, 0.37557720064513844};
inline const complex kExactM2{0.7488674961977528, 0.7084018856938167};
inline constexpr double kExactN1 = 1.0616846786429588;
inline constexpr double kExactN2 = 1.191712785192626;

// alpha=0.5, gamma=1e-4, r1=r2=0.2, phi=0.3, mu=0.7, eta=0.9
inline const complex kLossyLinM1{0.37842500174420596, 0.1220161474252803};
inline const complex kLossyLinM2{0.1283360112969616, 0.09232225809605925};
inline constexpr double kLossyLinN1 = 0.17141188108624134;
inline const complex kLossyExactM1{0.37842499937900587, 0.12201614666278718};
inline const complex kLossyExactM2{0.12833600584259472, 0.0923222541723824};
inline constexpr double kLossyExactN1 = 0.17141187911007608;

// reference_point() with mu=0.7, eta=1 and with mu=0.7, eta=0.9 (linearized)
inline const complex kMuOnlyM1{0.7892077641138555, 0.31423044322762506};
inline const complex kMuOnlyM2{0.5242073207327371, 0.4958813894034711};
inline constexpr double kMuOnlyN1 = 0.8246414279995281;
inline const complex kMuEtaM2{0.47178658865946366, 0.4462932504631238};

// alpha=2, gamma=1e-3, r1=r2=0.8, phi=5.9 (linearized)
inline const complex kEdgeM1{1.7298564187111771, -1.351454938339739};
inline const complex kEdgeM2{1.1566208910144637, -4.677978103720181};
inline constexpr double kEdgeN1 = 5.02354209964891;
inline constexpr double kEdgeN2 = 27.25088546621044;

// figure_point(1e-6, 6.15) (linearized)
inline const complex kFigM1{83.7059246913577, -189.70451430876219};
inline const complex kFigM2{-28981.184464151727, -31758.725591850554};
inline constexpr double kFigN1 = 42997.78402541294;
inline constexpr double kFigN2 = 1849093158.2537565;
inline constexpr double kFigVar1 = 3870981.6324141147;
inline constexpr double kFigVar2 = 3597244.3009717297;
inline constexpr double kFigCov = 3729100.9902992267;

// reference_point(), centered difference h=1e-5 on linearized moments
inline constexpr double kFdSi = 2.6001632232921343;
inline constexpr double kFdHd = 1.3721112394930888;

// alpha=0, r1=0.5: two-mode squeezed vacuum, var1 = var2 = cov
inline constexpr double kTmsvVar = 0.34527446138545387;

} // namespace kerrsu::test
