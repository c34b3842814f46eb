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
#include "kerrsu/fock_oracle.hpp"
#include "kerrsu/sensitivity.hpp"
#include "unit/helpers.hpp"

using namespace kerrsu;

namespace {

double qcrb_of(double v1, double v2, double c) {
    return 0.5 * std::sqrt((v1 + v2 - 2 * c) / (v1 * v2 - c * c));
}

} // namespace

TEST_CASE("quantum Fisher information from number statistics") {
    CHECK(qfi_from_number_stats({3.0, 3.0, 0.0}) == doctest::Approx(6.0));
    CHECK(qfi_from_number_stats({3.0, 0.0, 0.0}) == 0.0);
    CHECK_THROWS_AS(qfi_from_number_stats({2.0, 2.0, 2.0}), DegenerateStatisticsError);
}

TEST_CASE("quantum Cramer-Rao bound") {
    CHECK(qcrb(4) == 0.5);
    CHECK(qcrb(1) == 1.0);
    CHECK(qcrb(1e8) == doctest::Approx(1e-4));
    CHECK_THROWS_AS(qcrb(0.0), DomainError);
    CHECK_THROWS_AS(qcrb(-1.0), DomainError);
}

TEST_CASE("Kerr-seed bound against oracle statistics") {
    const double oracle = qcrb_of(test::kLinVar1, test::kLinVar2, test::kLinCov);
    CHECK_REL(qcrb_kerr_seed(1.0, 1e-4, 0.5), oracle, 1e-6);
    const double fig = qcrb_of(test::kFigVar1, test::kFigVar2, test::kFigCov);
    CHECK_REL(qcrb_kerr_seed(100.0, 1e-6, 2.0), fig, 1e-6);

    // the simulator's own statistics, exact Kerr seed, agree at gamma = 0
    auto c = test::point(1.0, 0.0, 0.5, 0.0);
    const NumberStats s = simulate(c, KerrVariant::exact).internal;
    CHECK_REL(qcrb_kerr_seed(1.0, 0.0, 0.5), qcrb_of(s.var1, s.var2, s.cov), 1e-10);
}

TEST_CASE("bound plumbing paths agree") {
    for (double a : {0.5, 2.0, 100.0})
        for (double r : {0.3, 2.0}) {
            const double g = a > 10 ? 1e-6 : 1e-4;
            const NumberStats s = internal_number_stats({a, g, r});
            CHECK_REL(qcrb(qfi_from_number_stats(s)), qcrb_kerr_seed(a, g, r), 1e-12);
        }
}

TEST_CASE("gamma = 0 gives the coherent-seed bound") {
    CHECK_REL(qcrb_kerr_seed(2.0, 0.0, 0.8), qcrb_coherent_seed(2.0, 0.8), 1e-14);
    CHECK_REL(qcrb_kerr_seed(100.0, 0.0, 2.0), qcrb_coherent_seed(100.0, 2.0), 1e-14);
}

TEST_CASE("Kerr seeding lowers the bound at the figure point") {
    const double kerr = qcrb_kerr_seed(100.0, 1e-6, 2.0);
    const double coh = qcrb_coherent_seed(100.0, 2.0);
    CHECK(kerr <= coh);
    CHECK(kerr <= phase_sensitivity_hd(test::figure_point(1e-6, 6.15)).delta_phi);
    CHECK(coh <= phase_sensitivity_hd(test::figure_point(0.0, 6.15)).delta_phi);
}

TEST_CASE("the bound is lossless only") {
    const auto c = test::point(1.0, 1e-4, 0.5, 0.3, 0.9, 1.0);
    CHECK_THROWS_AS(qcrb_for_config(c), WrongOperationError);
    CHECK(qcrb_for_config(test::reference_point()) == qcrb_kerr_seed(1.0, 1e-4, 0.5));
}

TEST_CASE("degenerate statistics without squeezing") {
    CHECK_THROWS_AS(qcrb_kerr_seed(1.0, 1e-4, 0.0), DegenerateStatisticsError);
}
