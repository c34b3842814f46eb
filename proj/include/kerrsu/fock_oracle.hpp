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
 * Brute-force truncated Fock-space reference for the interferometer.
 *
 * Two independent engines live here:
 *
 *  - exact: the Kerr unitary exp(-i gamma n(n-1)) is applied to a coherent
 *    state, then the OPA unitaries, phase and loss channels act on a two-mode
 *    state vector (or a dense density matrix once loss is present).
 *  - linearized: the output operator is composed element by element from
 *    Bogoliubov maps acting on mode operators, with the seed mode replaced by
 *    the matrix (1 - 2i gamma N) A. Its powers are evaluated numerically on a
 *    small tensor space holding the seed and vacuum ancilla modes.
 *
 * Neither engine uses any closed-form moment expression.
 */
#pragma once

#include <Eigen/Dense>
#include <Eigen/SparseCore>

#include <vector>

#include "kerrsu/core_model.hpp"

namespace kerrsu {

enum class KerrVariant { exact, linearized };
std::string_view to_string(KerrVariant v);

inline constexpr double kDefaultTruncationBudget = 1e-12;
inline constexpr double kSeedTail = 1e-14;
inline constexpr int kMaxAutoNmax = 128;
inline constexpr int kMaxDensityNmax = 32;

/// Smallest n_max whose Poisson tail beyond n_max is below `tail`.
int coherent_cutoff(double alpha, double tail = kSeedTail);

/**
 * Amplitudes e^{-alpha^2/2} alpha^n / sqrt(n!) for n = 0..n_max. Throws
 * TruncationError carrying the required n_max when the tail is too heavy.
 */
Eigen::VectorXcd coherent_state(double alpha, int n_max);

/**
 * Two-mode pure state with amplitudes indexed (n1, n2), 0 <= ni <= n_max.
 *
 * Photon-number-diagonal unitaries (Kerr, phase) are accumulated as a pending
 * phase per basis state and only folded into the amplitudes when a
 * non-diagonal operation or a moment needs them. The number distribution
 * therefore never sees their rounding.
 */
class TruncatedState {
  public:
    explicit TruncatedState(int n_max);
    /// mode1 (x) vacuum; mode1 may be shorter than n_max + 1.
    static TruncatedState product(const Eigen::VectorXcd &mode1, int n_max);

    [[nodiscard]] int n_max() const noexcept { return n_max_; }
    [[nodiscard]] int side() const noexcept { return n_max_ + 1; }
    [[nodiscard]] int index(int n1, int n2) const noexcept {
        return n1 * side() + n2;
    }

    /// Amplitudes with any pending phase applied.
    const Eigen::VectorXcd &amplitudes() const;
    Eigen::VectorXcd &mutable_amplitudes();

    void add_diagonal_phase(int mode, const std::vector<double> &phase_of_n);

    [[nodiscard]] double norm_squared() const;
    /// Population with n1 == n_max or n2 == n_max.
    [[nodiscard]] double boundary_population() const;
    /// Marginal photon-number distribution; unaffected by pending phases.
    [[nodiscard]] std::vector<double> number_distribution(int mode) const;

    [[nodiscard]] MomentSet moments(int mode) const;
    [[nodiscard]] NumberStats number_stats() const;

  private:
    void flush() const;

    int n_max_;
    mutable Eigen::VectorXcd amps_;
    mutable Eigen::VectorXd pending_;
    mutable bool has_pending_ = false;
};

/// Multiplies amplitude n of `mode` by exp(-i gamma n (n - 1)).
void apply_kerr(TruncatedState &state, double gamma, int mode);
/// Multiplies amplitude n of `mode` by exp(i n phi).
void phase_shift(TruncatedState &state, double phi, int mode);

struct SqueezeReport {
    double leakage = 0.0;    ///< boundary population after the step
    double norm_drift = 0.0; ///< |norm after - norm before|
};

/**
 * Applies exp(r (e^{i theta} a1^dag a2^dag - e^{-i theta} a1 a2)) through a
 * Chebyshev expansion of the truncated generator. Throws TruncationError when
 * the boundary population exceeds `budget`.
 */
SqueezeReport two_mode_squeeze(TruncatedState &state, double r, double theta,
                               double budget = kDefaultTruncationBudget);

/// Dense density matrix over the same (n1, n2) basis.
class TruncatedDensityMatrix {
  public:
    explicit TruncatedDensityMatrix(int n_max);
    static TruncatedDensityMatrix from_state(const TruncatedState &state);

    [[nodiscard]] int n_max() const noexcept { return n_max_; }
    [[nodiscard]] int side() const noexcept { return n_max_ + 1; }
    [[nodiscard]] int index(int n1, int n2) const noexcept {
        return n1 * side() + n2;
    }
    const Eigen::MatrixXcd &matrix() const noexcept { return rho_; }
    Eigen::MatrixXcd &matrix() noexcept { return rho_; }

    [[nodiscard]] complex trace() const;
    [[nodiscard]] double hermiticity_error() const;
    [[nodiscard]] double min_eigenvalue() const;
    [[nodiscard]] double boundary_population() const;
    [[nodiscard]] MomentSet moments(int mode) const;

  private:
    int n_max_;
    Eigen::MatrixXcd rho_;
};

void apply_kerr(TruncatedDensityMatrix &rho, double gamma, int mode);
void phase_shift(TruncatedDensityMatrix &rho, double phi, int mode);
SqueezeReport two_mode_squeeze(TruncatedDensityMatrix &rho, double r,
                               double theta,
                               double budget = kDefaultTruncationBudget);

/// Pure-loss channel of transmissivity T on `mode`, via its Kraus ladder.
TruncatedDensityMatrix loss_channel(const TruncatedDensityMatrix &rho,
                                    double transmissivity, int mode);
TruncatedDensityMatrix loss_channel(const TruncatedState &state,
                                    double transmissivity, int mode);

using SparseOp = Eigen::SparseMatrix<complex>;

/// Truncated annihilation operator on dim levels.
SparseOp annihilation_operator(int dim);
/// (I - 2i gamma N) A on dim levels. Not unitary; used inside expectations.
SparseOp linearized_mode_operator(double gamma, int dim);

struct OracleOptions {
    int n_max = 0; ///< 0 selects automatically
    double truncation_budget = kDefaultTruncationBudget;
    bool convergence_check = true;
    /// Route lossless runs through the density-matrix path as well.
    bool force_density_matrix = false;
};

struct OracleResult {
    MomentSet moments;
    NumberStats internal;
    int n_max = 0;
    double leakage = 0.0;
};

/// Automatic cutoff of the exact engine for this configuration.
int auto_n_max(const InterferometerConfig &cfg);

/**
 * Runs seed -> Kerr -> OPA-1 -> internal loss mu on both arms -> phase on
 * mode 1 -> OPA-2 -> external loss eta on mode 1, returning the moments of
 * mode 1 and the number statistics right after OPA-1.
 */
OracleResult simulate(const InterferometerConfig &cfg, KerrVariant variant,
                      const OracleOptions &options = {});

/**
 * Error propagation with oracle moments: the variance is taken at phi and the
 * derivative of the mean by a centered difference of step h.
 */
SensitivityResult oracle_phase_sensitivity(const InterferometerConfig &cfg,
                                           DetectionScheme scheme,
                                           KerrVariant variant, double h,
                                           const OracleOptions &options = {});

} // namespace kerrsu
