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
#include "kerrsu/fock_oracle.hpp"
#include "unit/helpers.hpp"

using namespace kerrsu;
using test::rel;

namespace {

double mean_n(const Eigen::VectorXcd &v) {
    double m = 0;
    for (Eigen::Index n = 0; n < v.size(); ++n)
        m += n * std::norm(v[n]);
    return m;
}

TruncatedState seeded(double alpha, int n_max) {
    return TruncatedState::product(coherent_state(alpha, n_max), n_max);
}

double max_delta(const MomentSet &a, const MomentSet &b) {
    return std::max({std::abs(a.m1 - b.m1), std::abs(a.m2 - b.m2),
                     std::abs(a.n1 - b.n1), std::abs(a.n2 - b.n2)});
}

} // namespace

TEST_CASE("coherent state amplitudes") {
    const auto vac = coherent_state(0.0, 5);
    CHECK(vac[0] == complex(1.0));
    CHECK(vac.tail(5).norm() == 0.0);

    const auto one = coherent_state(1.0, 30);
    const double m = mean_n(one);
    double var = 0;
    for (int n = 0; n <= 30; ++n)
        var += (n - m) * (n - m) * std::norm(one[n]);
    CHECK(std::abs(m - 1.0) < 1e-12);
    CHECK(std::abs(var - 1.0) < 1e-12);

    CHECK(std::abs(coherent_state(2.0, 40).squaredNorm() - 1.0) < 1e-14);
    // no underflow at the figure amplitude
    const int cut = coherent_cutoff(100.0);
    CHECK(std::abs(coherent_state(100.0, cut).squaredNorm() - 1.0) < 1e-10);
}

TEST_CASE("coherent state reports the n_max it needs") {
    const int need = coherent_cutoff(2.0);
    try {
        coherent_state(2.0, need - 1);
        FAIL("expected TruncationError");
    } catch (const TruncationError &e) {
        CHECK(e.suggested_n_max() == need);
    }
}

TEST_CASE("Kerr evolution keeps the number distribution bit-exact") {
    TruncatedState st = seeded(1.5, 30);
    const auto before = st.number_distribution(0);
    apply_kerr(st, 0.37, 0);
    CHECK(st.number_distribution(0) == before);
    // also after the phases are materialized
    (void)st.amplitudes();
    const auto after = st.number_distribution(0);
    for (std::size_t n = 0; n < before.size(); ++n)
        CHECK(std::abs(after[n] - before[n]) <= 1e-15 * before[n] + 1e-300);
}

TEST_CASE("Kerr phases") {
    TruncatedState st = seeded(1.0, 20);
    const Eigen::VectorXcd ref = st.amplitudes();
    apply_kerr(st, 0.0, 0);
    CHECK((st.amplitudes() - ref).norm() == 0.0);
    apply_kerr(st, kPi, 0);
    const auto &v = st.amplitudes();
    CHECK(v[st.index(0, 0)] == ref[st.index(0, 0)]);
    CHECK(v[st.index(1, 0)] == ref[st.index(1, 0)]);
    CHECK(std::abs(v[st.index(2, 0)] - ref[st.index(2, 0)]) < 1e-15);
}

TEST_CASE("linearized mode operator") {
    const int dim = 40;
    const SparseOp a = annihilation_operator(dim);
    const SparseOp k0 = linearized_mode_operator(0.0, dim);
    CHECK((Eigen::MatrixXcd(k0) - Eigen::MatrixXcd(a)).norm() == 0.0);

    const double alpha = 1.3, gamma = 1e-3;
    const Eigen::VectorXcd psi = coherent_state(alpha, dim - 1);
    const complex k = psi.dot(linearized_mode_operator(gamma, dim) * psi);
    CHECK_REL(k, alpha * complex(1.0, -2.0 * gamma * alpha * alpha), 1e-13);

    Eigen::VectorXcd vac = Eigen::VectorXcd::Zero(dim);
    vac[0] = 1.0;
    CHECK((linearized_mode_operator(gamma, dim) * vac).norm() == 0.0);
}

TEST_CASE("two-mode squeezing") {
    SUBCASE("vacuum input") {
        TruncatedState st(60);
        const auto rep = two_mode_squeeze(st, 0.5, 0.0);
        const double s2 = std::sinh(0.5) * std::sinh(0.5); // 0.27259...
        CHECK(st.moments(0).n1.real() == doctest::Approx(s2).epsilon(1e-12));
        CHECK(rep.norm_drift <= 1e-10);
        CHECK(rep.leakage <= kDefaultTruncationBudget);
    }
    SUBCASE("r = 0 is the identity") {
        TruncatedState st = seeded(1.0, 20);
        const Eigen::VectorXcd ref = st.amplitudes();
        two_mode_squeeze(st, 0.0, 1.0);
        CHECK((st.amplitudes() - ref).norm() == 0.0);
    }
    SUBCASE("first moment follows the Bogoliubov map") {
        TruncatedState st = seeded(1.2, 60);
        two_mode_squeeze(st, 0.4, 0.7);
        CHECK_REL(st.moments(0).m1, complex(1.2 * std::cosh(0.4)), 1e-12);
        CHECK_REL(st.moments(1).m1, std::polar(1.2 * std::sinh(0.4), 0.7), 1e-12);
    }
    SUBCASE("leakage beyond the budget is an error") {
        TruncatedState st(12);
        CHECK_THROWS_AS(two_mode_squeeze(st, 1.5, 0.0), TruncationError);
    }
}

TEST_CASE("phase shift convention") {
    TruncatedState st = seeded(1.0, 25);
    const Eigen::VectorXcd ref = st.amplitudes();
    phase_shift(st, 0.0, 0);
    CHECK((st.amplitudes() - ref).norm() == 0.0);
    phase_shift(st, kTwoPi, 0);
    CHECK((st.amplitudes() - ref).norm() < 1e-14);
    phase_shift(st, 0.8, 0);
    // the annihilation operator acquires e^{+i phi}
    CHECK_REL(st.moments(0).m1, std::polar(1.0, 0.8), 1e-13);
}

TEST_CASE("global phase is invisible") {
    TruncatedState st = seeded(1.0, 50);
    two_mode_squeeze(st, 0.5, 0.3);
    const MomentSet a = st.moments(0);
    st.mutable_amplitudes() *= std::polar(1.0, 1.234);
    CHECK(max_delta(a, st.moments(0)) < 1e-14);
}

TEST_CASE("loss channel") {
    SUBCASE("coherent state stays coherent") {
        const auto rho = loss_channel(seeded(1.5, 30), 0.6, 0);
        CHECK(rho.moments(0).n1.real() == doctest::Approx(0.6 * 2.25).epsilon(1e-12));
        CHECK(std::abs(rho.trace() - 1.0) < 1e-12);
        CHECK(rho.hermiticity_error() < 1e-12);
        CHECK(rho.min_eigenvalue() > -1e-10);
    }
    SUBCASE("T = 1 is the identity") {
        TruncatedState st = seeded(1.0, 20);
        two_mode_squeeze(st, 0.3, 0.0, 1e-6);
        const auto rho = TruncatedDensityMatrix::from_state(st);
        CHECK((loss_channel(rho, 1.0, 0).matrix() - rho.matrix()).norm() == 0.0);
    }
    SUBCASE("single photon") {
        TruncatedState st(4);
        st.mutable_amplitudes().setZero();
        st.mutable_amplitudes()[st.index(1, 0)] = 1.0;
        const auto rho = loss_channel(st, 0.7, 0);
        CHECK(rho.matrix()(rho.index(0, 0), rho.index(0, 0)).real() ==
              doctest::Approx(0.3));
        CHECK(rho.matrix()(rho.index(1, 0), rho.index(1, 0)).real() ==
              doctest::Approx(0.7));
        CHECK(rho.moments(0).n1.real() == doctest::Approx(0.7));
    }
    SUBCASE("trace preservation on a squeezed state") {
        TruncatedState st = seeded(1.0, 16);
        two_mode_squeeze(st, 0.3, 0.0, 1e-6);
        const auto rho = TruncatedDensityMatrix::from_state(st);
        const complex t0 = rho.trace();
        const auto out = loss_channel(loss_channel(rho, 0.7, 0), 0.5, 1);
        CHECK(std::abs(out.trace() - t0) < 1e-12);
    }
    SUBCASE("transmissivity range") {
        const auto rho = TruncatedDensityMatrix::from_state(seeded(0.5, 10));
        CHECK_THROWS_AS(loss_channel(rho, 0.0, 0), DomainError);
        CHECK_THROWS_AS(loss_channel(rho, 1.1, 0), DomainError);
    }
}

TEST_CASE("simulation pass-through") {
    const auto c = test::point(2.0, 0.0, 0.0, 0.0);
    for (auto v : {KerrVariant::exact, KerrVariant::linearized}) {
        const MomentSet m = simulate(c, v).moments;
        CHECK_REL(m.m1, complex(2.0), 1e-12);
        CHECK_REL(m.m2, complex(4.0), 1e-12);
        CHECK_REL(m.n1, complex(4.0), 1e-12);
        CHECK_REL(m.n2, complex(16.0), 1e-12);
    }
}

TEST_CASE("simulation against the independent reference oracle") {
    const auto c = test::reference_point();
    const auto lin = simulate(c, KerrVariant::linearized);
    CHECK_REL(lin.moments.m1, test::kLinM1, 1e-12);
    CHECK_REL(lin.moments.m2, test::kLinM2, 1e-12);
    CHECK_REL(lin.moments.n1, test::kLinN1, 1e-12);
    CHECK_REL(lin.moments.n2, test::kLinN2, 1e-12);
    CHECK_REL(lin.internal.var1, test::kLinVar1, 1e-12);
    CHECK_REL(lin.internal.cov, test::kLinCov, 1e-12);

    const auto ex = simulate(c, KerrVariant::exact);
    CHECK_REL(ex.moments.m1, test::kExactM1, 1e-12);
    CHECK_REL(ex.moments.m2, test::kExactM2, 1e-12);
    CHECK_REL(ex.moments.n1, test::kExactN1, 1e-12);
    CHECK_REL(ex.moments.n2, test::kExactN2, 1e-12);
    CHECK(ex.leakage <= kDefaultTruncationBudget);

    const auto lossy = test::point(0.5, 1e-4, 0.2, 0.3, 0.7, 0.9);
    const auto ll = simulate(lossy, KerrVariant::linearized).moments;
    CHECK_REL(ll.m1, test::kLossyLinM1, 1e-12);
    CHECK_REL(ll.m2, test::kLossyLinM2, 1e-12);
    CHECK_REL(ll.n1, test::kLossyLinN1, 1e-12);
    const auto le = simulate(lossy, KerrVariant::exact).moments;
    CHECK_REL(le.m1, test::kLossyExactM1, 1e-10);
    CHECK_REL(le.m2, test::kLossyExactM2, 1e-10);
    CHECK_REL(le.n1, test::kLossyExactN1, 1e-10);
}

TEST_CASE("linearized simulation reproduces the closed forms") {
    const auto c = test::reference_point();
    const MomentSet a = lossless_moments(c);
    const MomentSet o = simulate(c, KerrVariant::linearized).moments;
    CHECK_REL(a.m1, o.m1, 1e-8);
    CHECK_REL(a.m2, o.m2, 1e-8);
    CHECK_REL(a.n1, o.n1, 1e-8);
    CHECK_REL(a.n2, o.n2, 1e-8);
}

TEST_CASE("balanced OPAs undo each other on vacuum") {
    auto c = test::point(0.0, 0.0, 2.0, 0.0);
    OracleOptions o;
    o.n_max = 128;
    o.truncation_budget = 1e-3;
    o.convergence_check = false;
    const auto res = simulate(c, KerrVariant::exact, o);
    CHECK(res.moments.n1.real() < 10 * res.leakage);
    CHECK(simulate(c, KerrVariant::linearized).moments.n1.real() < 1e-12);
}

TEST_CASE("pure-state and density-matrix paths agree") {
    const auto c = test::point(0.8, 1e-4, 0.3, 0.4);
    OracleOptions o;
    o.n_max = 24;
    o.convergence_check = false;
    const MomentSet pure = simulate(c, KerrVariant::exact, o).moments;
    o.force_density_matrix = true;
    const MomentSet dm = simulate(c, KerrVariant::exact, o).moments;
    CHECK(max_delta(pure, dm) < 1e-12);
}

TEST_CASE("exact and linearized seeds coincide at gamma = 0") {
    for (double a : {0.5, 2.0})
        for (double r : {0.3, 0.8}) {
            const auto c = test::point(a, 0.0, r, 5.9);
            const MomentSet e = simulate(c, KerrVariant::exact).moments;
            const MomentSet l = simulate(c, KerrVariant::linearized).moments;
            CHECK_REL(e.m1, l.m1, 1e-10);
            CHECK_REL(e.m2, l.m2, 1e-10);
            CHECK_REL(e.n1, l.n1, 1e-10);
            CHECK_REL(e.n2, l.n2, 1e-10);
        }
}

TEST_CASE("linearization error is second order in gamma") {
    // The exact seed has <a> = alpha e^{-alpha^2 (1 - e^{-2i gamma})}, whose
    // first-order term equals the linearized one, so the residual is O(gamma^2).
    auto lo = test::reference_point();
    auto hi = lo;
    hi.gamma = 1e-3;
    const double d_lo = rel(lossless_first_moment(lo), simulate(lo, KerrVariant::exact).moments.m1);
    const double d_hi = rel(lossless_first_moment(hi), simulate(hi, KerrVariant::exact).moments.m1);
    CHECK(d_hi / d_lo > 80.0);
    CHECK(d_hi / d_lo < 120.0);
}

TEST_CASE("auto n_max grows with squeezing and is capped") {
    CHECK(auto_n_max(test::point(1.0, 0.0, 0.3, 0.0)) <
          auto_n_max(test::point(1.0, 0.0, 0.8, 0.0)));
    CHECK(auto_n_max(test::point(1.0, 0.0, 3.0, 0.0)) == kMaxAutoNmax);
}
