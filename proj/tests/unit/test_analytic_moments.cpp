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
#include "unit/helpers.hpp"

using namespace kerrsu;
using test::rel;

namespace {

InterferometerConfig identity_point(double alpha, double gamma = 0.0) {
    InterferometerConfig c = test::point(alpha, gamma, 0.0, 0.0);
    return c;
}

std::vector<InterferometerConfig> validation_grid(bool lossy) {
    std::vector<InterferometerConfig> out;
    for (double a : {0.5, 1.0, 2.0})
        for (double g : {0.0, 1e-4, 1e-3})
            for (double r : {0.3, 0.8})
                for (double phi : {0.1, 5.9})
                    for (double mu : lossy ? std::vector<double>{1.0, 0.7}
                                           : std::vector<double>{1.0})
                        for (double eta : lossy ? std::vector<double>{1.0, 0.7}
                                                : std::vector<double>{1.0})
                            out.push_back(test::point(a, g, r, phi, mu, eta));
    return out;
}

} // namespace

TEST_CASE("mean photon number of the Kerr seed") {
    CHECK(mean_photon_kerr(100, 0) == 10000.0);
    CHECK(mean_photon_kerr(100, 1e-6) == doctest::Approx(10004.0004).epsilon(1e-13));
    CHECK(mean_photon_kerr(0, 1e-3) == 0.0);
}

TEST_CASE("identity interferometer passes the coherent seed through") {
    const auto c = identity_point(2.0);
    CHECK_REL(lossless_first_moment(c), complex(2.0), 1e-15);
    CHECK_REL(lossless_second_moment(c), complex(4.0), 1e-15);
    CHECK(lossless_number_moment(c) == doctest::Approx(4.0).epsilon(1e-15));
    CHECK(lossless_fourth_moment(c) == doctest::Approx(16.0).epsilon(1e-15));
}

TEST_CASE("number moment reduces to the seed photon number without squeezing") {
    for (double g : {0.0, 1e-5, 1e-3}) {
        InterferometerConfig c = identity_point(1.7, g);
        c.phi = 2.3;
        c.theta1 = 0.4;
        CHECK(lossless_number_moment(c) ==
              doctest::Approx(mean_photon_kerr(1.7, g)).epsilon(1e-13));
    }
}

TEST_CASE("vacuum seed with one OPA gives thermal marginals") {
    InterferometerConfig c = test::point(0.0, 0.0, 0.0, 0.0);
    c.r1 = 0.7;
    const double s2 = std::sinh(0.7) * std::sinh(0.7);
    CHECK(lossless_number_moment(c) == doctest::Approx(s2).epsilon(1e-14));
    CHECK(lossless_fourth_moment(c) == doctest::Approx(2 * s2 * s2).epsilon(1e-14));
    CHECK(std::abs(lossless_second_moment(c)) < 1e-15);
}

TEST_CASE("lossless moments match the independent linearized oracle") {
    const auto c = test::reference_point();
    CHECK_REL(lossless_first_moment(c), test::kLinM1, 1e-8);
    CHECK_REL(lossless_second_moment(c), test::kLinM2, 1e-8);
    CHECK_REL(lossless_number_moment(c), test::kLinN1, 1e-8);
    CHECK_REL(lossless_fourth_moment(c), test::kLinN2, 1e-8);

    const auto e = test::point(2.0, 1e-3, 0.8, 5.9);
    CHECK_REL(lossless_first_moment(e), test::kEdgeM1, 1e-8);
    CHECK_REL(lossless_second_moment(e), test::kEdgeM2, 1e-8);
    CHECK_REL(lossless_number_moment(e), test::kEdgeN1, 1e-8);
    CHECK_REL(lossless_fourth_moment(e), test::kEdgeN2, 1e-8);
}

TEST_CASE("lossless moments at the figure configuration") {
    const auto c = test::figure_point(1e-6, 6.15);
    CHECK_REL(lossless_first_moment(c), test::kFigM1, 1e-8);
    CHECK_REL(lossless_second_moment(c), test::kFigM2, 1e-8);
    CHECK_REL(lossless_number_moment(c), test::kFigN1, 1e-8);
    CHECK_REL(lossless_fourth_moment(c), test::kFigN2, 1e-8);
}

TEST_CASE("gamma = 0 gives the coherent-seed moments") {
    auto c = test::reference_point();
    c.gamma = 0.0;
    const auto k = chain_coefficients(c);
    CHECK_REL(lossless_first_moment(c), k.c1 * c.alpha, 1e-14);
    CHECK_REL(lossless_second_moment(c), k.c1 * k.c1 * c.alpha * c.alpha, 1e-14);
    CHECK_REL(lossless_number_moment(c),
              std::norm(k.c1) * c.alpha * c.alpha + std::norm(k.c2), 1e-14);
}

TEST_CASE("printed number moment uses the wrong phase") {
    // cos(phi) and cos(theta1 - theta2 + phi) coincide only when the OPA
    // phases differ by a multiple of 2pi.
    auto c = test::reference_point();
    CHECK(rel(lossless_number_moment(c, Derivation::printed), test::kLinN1) > 0.1);
    c.theta2 = 0.0;
    CHECK(lossless_number_moment(c, Derivation::printed) ==
          doctest::Approx(lossless_number_moment(c)).epsilon(1e-13));
}

TEST_CASE("lossless operations refuse lossy configs") {
    const auto c = test::point(1.0, 1e-4, 0.5, 0.3, 0.9, 1.0);
    CHECK_THROWS_AS(lossless_first_moment(c), WrongOperationError);
    CHECK_THROWS_AS(lossless_second_moment(c), WrongOperationError);
    CHECK_THROWS_AS(lossless_number_moment(c), WrongOperationError);
    CHECK_THROWS_AS(lossless_fourth_moment(c), WrongOperationError);
}

TEST_CASE("lossy moments reduce to the lossless ones at mu = eta = 1") {
    for (const auto &c : validation_grid(false)) {
        CHECK_REL(lossy_first_moment(c), lossless_first_moment(c), 1e-12);
        CHECK_REL(lossy_number_moment(c), lossless_number_moment(c), 1e-12);
        CHECK_REL(lossy_second_moment(c, Derivation::rederived),
                  lossless_second_moment(c), 1e-12);
        CHECK_REL(lossy_second_moment(c, Derivation::printed),
                  lossless_second_moment(c), 1e-12);
    }
}

TEST_CASE("lossy moments against the independent oracle") {
    const auto c = test::point(1.0, 1e-4, 0.5, 0.3, 0.7, 1.0);
    CHECK_REL(lossy_first_moment(c), test::kMuOnlyM1, 1e-8);
    CHECK_REL(lossy_second_moment(c, Derivation::rederived), test::kMuOnlyM2, 1e-8);
    CHECK_REL(lossy_number_moment(c), test::kMuOnlyN1, 1e-8);

    const auto d = test::point(1.0, 1e-4, 0.5, 0.3, 0.7, 0.9);
    CHECK_REL(lossy_second_moment(d, Derivation::rederived), test::kMuEtaM2, 1e-8);
    // the printed second moment is a documented discrepancy
    CHECK(rel(lossy_second_moment(d, Derivation::printed), test::kMuEtaM2) > 1e-3);

    const auto s = test::point(0.5, 1e-4, 0.2, 0.3, 0.7, 0.9);
    CHECK_REL(lossy_first_moment(s), test::kLossyLinM1, 1e-8);
    CHECK_REL(lossy_second_moment(s, Derivation::rederived), test::kLossyLinM2, 1e-8);
    CHECK_REL(lossy_number_moment(s), test::kLossyLinN1, 1e-8);
}

TEST_CASE("lossy moments vanish or scale as expected") {
    auto c = test::point(0.0, 1e-4, 0.5, 0.3, 0.7, 0.9);
    CHECK(std::abs(lossy_first_moment(c)) == 0.0);
    c = test::point(1.0, 1e-4, 0.5, 0.3, 0.7, 0.9);
    auto half = c;
    half.eta = 0.45;
    CHECK(lossy_number_moment(half) / lossy_number_moment(c) ==
          doctest::Approx(0.5).epsilon(1e-13));
}

TEST_CASE("internal number statistics") {
    SUBCASE("two-mode squeezed vacuum") {
        const NumberStats s = internal_number_stats({0.0, 0.0, 0.5});
        CHECK(s.var1 == doctest::Approx(test::kTmsvVar).epsilon(1e-13));
        CHECK(s.var2 == doctest::Approx(test::kTmsvVar).epsilon(1e-13));
        CHECK(s.cov == doctest::Approx(test::kTmsvVar).epsilon(1e-13));
        const NumberStats p = internal_number_stats({0.0, 0.0, 0.5}, Derivation::printed);
        CHECK(p.var1 == doctest::Approx(test::kTmsvVar).epsilon(1e-13));
        CHECK(p.cov == doctest::Approx(test::kTmsvVar).epsilon(1e-13));
    }
    SUBCASE("Kerr seed against the linearized oracle") {
        const NumberStats s = internal_number_stats({1.0, 1e-4, 0.5});
        CHECK(s.var1 == doctest::Approx(test::kLinVar1).epsilon(1e-10));
        CHECK(s.var2 == doctest::Approx(test::kLinVar2).epsilon(1e-10));
        CHECK(s.cov == doctest::Approx(test::kLinCov).epsilon(1e-10));
        const NumberStats f = internal_number_stats({100.0, 1e-6, 2.0});
        CHECK_REL(f.var1, test::kFigVar1, 1e-8);
        CHECK_REL(f.var2, test::kFigVar2, 1e-8);
        CHECK_REL(f.cov, test::kFigCov, 1e-8);
    }
    SUBCASE("empty idler without squeezing") {
        for (auto d : {Derivation::printed, Derivation::rederived}) {
            const NumberStats s = internal_number_stats({1.3, 1e-4, 0.0}, d);
            CHECK(s.var2 == 0.0);
            CHECK(s.cov == 0.0);
        }
    }
}

TEST_CASE("closed-form phi derivatives match finite differences") {
    const double h = 1e-6;
    int compared = 0;
    for (const auto &base : validation_grid(true)) {
        auto p = base, m = base;
        p.phi += h;
        m.phi -= h;
        const complex fd1 = (lossy_first_moment(p) - lossy_first_moment(m)) / (2 * h);
        if (std::abs(fd1) > 1e-3) {
            CHECK_REL(first_moment_dphi(base), fd1, 1e-6);
            ++compared;
        }
        if (!base.lossless())
            continue;
        const double fdn =
            (lossless_number_moment(p) - lossless_number_moment(m)) / (2 * h);
        if (std::abs(fdn) > 1e-3) {
            CHECK_REL(number_moment_dphi(base), fdn, 1e-6);
            ++compared;
        }
    }
    CHECK(compared > 80);
}
