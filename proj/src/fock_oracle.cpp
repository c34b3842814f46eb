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

#include "kerrsu/fock_oracle.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <string>

#include "kerrsu/sensitivity.hpp"

namespace kerrsu {

namespace {

constexpr complex I{0.0, 1.0};

// Levels of the vacuum ancillas in the linearized engine. Fourth-order
// moments put at most two quanta into any of them.
constexpr int kIdlerLevels = 4;
constexpr int kAncillaLevels = 3;
constexpr int kSeedHeadroom = 6;

std::vector<double> sqrt_table(int n) {
    std::vector<double> s(static_cast<std::size_t>(n) + 2);
    for (std::size_t k = 0; k < s.size(); ++k)
        s[k] = std::sqrt(static_cast<double>(k));
    return s;
}

// y = H x for every column, where H = i G is the Hermitian form of the
// two-mode squeezing generator G = r (e^{i th} a1^dag a2^dag - e^{-i th} a1 a2).
void apply_squeeze_hamiltonian(const Eigen::MatrixXcd &x, Eigen::MatrixXcd &y,
                               int n_max, double r, double theta,
                               const std::vector<double> &s) {
    const int side = n_max + 1;
    const complex up = I * r * std::exp(I * theta);
    const complex down = -I * r * std::exp(-I * theta);
    y.resize(x.rows(), x.cols());
    for (Eigen::Index c = 0; c < x.cols(); ++c) {
        const complex *xc = x.col(c).data();
        complex *yc = y.col(c).data();
        for (int n1 = 0; n1 <= n_max; ++n1) {
            for (int n2 = 0; n2 <= n_max; ++n2) {
                const int i = n1 * side + n2;
                complex v = 0.0;
                if (n1 > 0 && n2 > 0)
                    v += up * (s[n1] * s[n2]) * xc[i - side - 1];
                if (n1 < n_max && n2 < n_max)
                    v += down * (s[n1 + 1] * s[n2 + 1]) * xc[i + side + 1];
                yc[i] = v;
            }
        }
    }
}

// Columns of x are replaced by exp(G) x using the Chebyshev expansion
// exp(-i b u) = sum_k eps_k (-i)^k J_k(b) T_k(u) with u = H / b.
void squeeze_columns(Eigen::MatrixXcd &x, int n_max, double r, double theta) {
    if (r == 0.0)
        return;
    const auto s = sqrt_table(n_max + 1);
    // Gershgorin bound on the spectrum of H
    const double b = r * (2.0 * n_max + 1.0);

    Eigen::MatrixXcd t_prev = x;
    Eigen::MatrixXcd t_cur, t_next, scratch;
    apply_squeeze_hamiltonian(t_prev, t_cur, n_max, r, theta, s);
    t_cur /= b;

    Eigen::MatrixXcd acc = std::cyl_bessel_j(0.0, b) * t_prev;
    complex phase = -I;
    acc += 2.0 * phase * std::cyl_bessel_j(1.0, b) * t_cur;
    for (int k = 2;; ++k) {
        const double jk = std::cyl_bessel_j(static_cast<double>(k), b);
        apply_squeeze_hamiltonian(t_cur, scratch, n_max, r, theta, s);
        t_next = (2.0 / b) * scratch - t_prev;
        phase *= -I;
        acc += 2.0 * phase * jk * t_next;
        if (k > b && std::abs(jk) < 1e-18)
            break;
        std::swap(t_prev, t_cur);
        std::swap(t_cur, t_next);
    }
    x = std::move(acc);
}

int suggest_larger(int n_max) {
    return static_cast<int>(std::ceil(1.5 * (n_max + 1)));
}

double binomial_sqrt_weight(int n, int k, double t) {
    // sqrt(C(n + k, k) t^n (1 - t)^k)
    if (k == 0)
        return std::pow(t, 0.5 * n);
    const double lc = std::lgamma(n + k + 1.0) - std::lgamma(n + 1.0) -
                      std::lgamma(k + 1.0);
    return std::exp(0.5 * lc) * std::pow(t, 0.5 * n) *
           std::pow(1.0 - t, 0.5 * k);
}

std::vector<double> kerr_phases(double gamma, int n_max) {
    std::vector<double> p(static_cast<std::size_t>(n_max) + 1);
    for (int n = 0; n <= n_max; ++n)
        p[n] = -gamma * n * (n - 1.0);
    return p;
}

std::vector<double> shift_phases(double phi, int n_max) {
    std::vector<double> p(static_cast<std::size_t>(n_max) + 1);
    for (int n = 0; n <= n_max; ++n)
        p[n] = phi * n;
    return p;
}

void check_mode(int mode) {
    if (mode != 0 && mode != 1)
        throw DomainError("mode index must be 0 or 1");
}

} // namespace

std::string_view to_string(KerrVariant v) {
    return v == KerrVariant::exact ? "exact" : "linearized";
}

int coherent_cutoff(double alpha, double tail) {
    const double l = alpha * alpha;
    if (l == 0.0)
        return 0;
    auto log_p = [&](int n) {
        return -l + n * std::log(l) - std::lgamma(n + 1.0);
    };
    for (int n = 0;; ++n) {
        if (n + 1 <= l)
            continue;
        // terms beyond the mode decrease geometrically
        double sum = 0.0;
        for (int k = n + 1;; ++k) {
            const double t = std::exp(log_p(k));
            sum += t;
            if (t <= 1e-30 * sum || t == 0.0)
                break;
        }
        if (sum < tail)
            return n;
    }
}

Eigen::VectorXcd coherent_state(double alpha, int n_max) {
    if (!(alpha >= 0.0) || !std::isfinite(alpha))
        throw DomainError("coherent_state: alpha must be finite and >= 0");
    const int need = coherent_cutoff(alpha);
    if (need > n_max)
        throw TruncationError("coherent seed tail needs n_max >= " +
                                  std::to_string(need),
                              need);
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(n_max + 1);
    if (alpha == 0.0) {
        v[0] = 1.0;
        return v;
    }
    // log space: exp(-alpha^2 / 2) underflows long before alpha = 100
    const double log_alpha = std::log(alpha);
    for (int n = 0; n <= n_max; ++n)
        v[n] = std::exp(-0.5 * alpha * alpha + n * log_alpha -
                        0.5 * std::lgamma(n + 1.0));
    return v;
}

// ---------------------------------------------------------------------------
// TruncatedState

TruncatedState::TruncatedState(int n_max)
    : n_max_(n_max), amps_(Eigen::VectorXcd::Zero((n_max + 1) * (n_max + 1))),
      pending_(Eigen::VectorXd::Zero((n_max + 1) * (n_max + 1))) {
    if (n_max < 0)
        throw DomainError("n_max must be non-negative");
    amps_[0] = 1.0;
}

TruncatedState TruncatedState::product(const Eigen::VectorXcd &mode1,
                                       int n_max) {
    if (mode1.size() > n_max + 1)
        throw DomainError("single-mode vector longer than the truncation");
    TruncatedState st(n_max);
    st.amps_.setZero();
    for (Eigen::Index n = 0; n < mode1.size(); ++n)
        st.amps_[st.index(static_cast<int>(n), 0)] = mode1[n];
    return st;
}

void TruncatedState::flush() const {
    if (!has_pending_)
        return;
    for (Eigen::Index i = 0; i < amps_.size(); ++i)
        amps_[i] *= std::polar(1.0, pending_[i]);
    pending_.setZero();
    has_pending_ = false;
}

const Eigen::VectorXcd &TruncatedState::amplitudes() const {
    flush();
    return amps_;
}

Eigen::VectorXcd &TruncatedState::mutable_amplitudes() {
    flush();
    return amps_;
}

void TruncatedState::add_diagonal_phase(int mode,
                                        const std::vector<double> &phase_of_n) {
    check_mode(mode);
    for (int n1 = 0; n1 <= n_max_; ++n1)
        for (int n2 = 0; n2 <= n_max_; ++n2)
            pending_[index(n1, n2)] += phase_of_n[mode == 0 ? n1 : n2];
    has_pending_ = true;
}

double TruncatedState::norm_squared() const { return amps_.squaredNorm(); }

double TruncatedState::boundary_population() const {
    double p = 0.0;
    for (int k = 0; k <= n_max_; ++k) {
        p += std::norm(amps_[index(n_max_, k)]);
        if (k != n_max_)
            p += std::norm(amps_[index(k, n_max_)]);
    }
    return p;
}

std::vector<double> TruncatedState::number_distribution(int mode) const {
    check_mode(mode);
    std::vector<double> p(static_cast<std::size_t>(n_max_) + 1, 0.0);
    for (int n1 = 0; n1 <= n_max_; ++n1)
        for (int n2 = 0; n2 <= n_max_; ++n2)
            p[mode == 0 ? n1 : n2] += std::norm(amps_[index(n1, n2)]);
    return p;
}

MomentSet TruncatedState::moments(int mode) const {
    check_mode(mode);
    flush();
    const int side = n_max_ + 1;
    const int step = mode == 0 ? side : 1;
    MomentSet m;
    complex m1 = 0.0, m2 = 0.0;
    double n1 = 0.0, n2 = 0.0;
    for (int a = 0; a <= n_max_; ++a) {
        for (int b = 0; b <= n_max_; ++b) {
            const int i = index(a, b);
            const int n = mode == 0 ? a : b;
            const double p = std::norm(amps_[i]);
            n1 += n * p;
            n2 += n * (n - 1.0) * p;
            if (n + 1 <= n_max_)
                m1 += std::conj(amps_[i]) * std::sqrt(n + 1.0) *
                      amps_[i + step];
            if (n + 2 <= n_max_)
                m2 += std::conj(amps_[i]) * std::sqrt((n + 1.0) * (n + 2.0)) *
                      amps_[i + 2 * step];
        }
    }
    m.m1 = m1;
    m.m2 = m2;
    m.n1 = n1;
    m.n2 = n2;
    return m;
}

NumberStats TruncatedState::number_stats() const {
    // two passes: means first, then centred second moments
    double e1 = 0, e2 = 0;
    for (int a = 0; a <= n_max_; ++a) {
        for (int b = 0; b <= n_max_; ++b) {
            const double p = std::norm(amps_[index(a, b)]);
            e1 += a * p;
            e2 += b * p;
        }
    }
    NumberStats s;
    for (int a = 0; a <= n_max_; ++a) {
        for (int b = 0; b <= n_max_; ++b) {
            const double p = std::norm(amps_[index(a, b)]);
            s.var1 += (a - e1) * (a - e1) * p;
            s.var2 += (b - e2) * (b - e2) * p;
            s.cov += (a - e1) * (b - e2) * p;
        }
    }
    return s;
}

void apply_kerr(TruncatedState &state, double gamma, int mode) {
    state.add_diagonal_phase(mode, kerr_phases(gamma, state.n_max()));
}

void phase_shift(TruncatedState &state, double phi, int mode) {
    state.add_diagonal_phase(mode, shift_phases(phi, state.n_max()));
}

SqueezeReport two_mode_squeeze(TruncatedState &state, double r, double theta,
                               double budget) {
    auto &v = state.mutable_amplitudes();
    const double before = v.squaredNorm();
    Eigen::MatrixXcd x = v;
    squeeze_columns(x, state.n_max(), r, theta);
    v = x.col(0);
    SqueezeReport rep;
    rep.norm_drift = std::abs(v.squaredNorm() - before);
    rep.leakage = state.boundary_population();
    if (rep.leakage > budget)
        throw TruncationError("two-mode squeeze leaks " +
                                  std::to_string(rep.leakage) +
                                  " onto the boundary at n_max " +
                                  std::to_string(state.n_max()),
                              suggest_larger(state.n_max()));
    return rep;
}

// ---------------------------------------------------------------------------
// TruncatedDensityMatrix

TruncatedDensityMatrix::TruncatedDensityMatrix(int n_max)
    : n_max_(n_max),
      rho_(Eigen::MatrixXcd::Zero((n_max + 1) * (n_max + 1),
                                  (n_max + 1) * (n_max + 1))) {
    rho_(0, 0) = 1.0;
}

TruncatedDensityMatrix
TruncatedDensityMatrix::from_state(const TruncatedState &state) {
    TruncatedDensityMatrix d(state.n_max());
    const auto &v = state.amplitudes();
    d.rho_ = v * v.adjoint();
    return d;
}

complex TruncatedDensityMatrix::trace() const { return rho_.trace(); }

double TruncatedDensityMatrix::hermiticity_error() const {
    return (rho_ - rho_.adjoint()).cwiseAbs().maxCoeff();
}

double TruncatedDensityMatrix::min_eigenvalue() const {
    const Eigen::MatrixXcd h = 0.5 * (rho_ + rho_.adjoint());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(
        h, Eigen::EigenvaluesOnly);
    return es.eigenvalues().minCoeff();
}

double TruncatedDensityMatrix::boundary_population() const {
    double p = 0.0;
    for (int k = 0; k <= n_max_; ++k) {
        p += rho_(index(n_max_, k), index(n_max_, k)).real();
        if (k != n_max_)
            p += rho_(index(k, n_max_), index(k, n_max_)).real();
    }
    return p;
}

MomentSet TruncatedDensityMatrix::moments(int mode) const {
    check_mode(mode);
    const int step = mode == 0 ? side() : 1;
    complex m1 = 0.0, m2 = 0.0;
    double n1 = 0.0, n2 = 0.0;
    for (int a = 0; a <= n_max_; ++a) {
        for (int b = 0; b <= n_max_; ++b) {
            const int i = index(a, b);
            const int n = mode == 0 ? a : b;
            const double p = rho_(i, i).real();
            n1 += n * p;
            n2 += n * (n - 1.0) * p;
            if (n + 1 <= n_max_)
                m1 += std::sqrt(n + 1.0) * rho_(i + step, i);
            if (n + 2 <= n_max_)
                m2 += std::sqrt((n + 1.0) * (n + 2.0)) * rho_(i + 2 * step, i);
        }
    }
    MomentSet m;
    m.m1 = m1;
    m.m2 = m2;
    m.n1 = n1;
    m.n2 = n2;
    return m;
}

namespace {

void diagonal_conjugation(TruncatedDensityMatrix &rho, int mode,
                          const std::vector<double> &phase_of_n) {
    check_mode(mode);
    const int side = rho.side();
    const int dim = side * side;
    std::vector<complex> f(static_cast<std::size_t>(dim));
    for (int i = 0; i < dim; ++i)
        f[i] = std::polar(1.0, phase_of_n[mode == 0 ? i / side : i % side]);
    auto &m = rho.matrix();
    for (int j = 0; j < dim; ++j)
        for (int i = 0; i < dim; ++i)
            m(i, j) *= f[i] * std::conj(f[j]);
}

} // namespace

void apply_kerr(TruncatedDensityMatrix &rho, double gamma, int mode) {
    diagonal_conjugation(rho, mode, kerr_phases(gamma, rho.n_max()));
}

void phase_shift(TruncatedDensityMatrix &rho, double phi, int mode) {
    diagonal_conjugation(rho, mode, shift_phases(phi, rho.n_max()));
}

SqueezeReport two_mode_squeeze(TruncatedDensityMatrix &rho, double r,
                               double theta, double budget) {
    auto &m = rho.matrix();
    const double before = m.trace().real();
    squeeze_columns(m, rho.n_max(), r, theta);
    Eigen::MatrixXcd y = m.adjoint();
    squeeze_columns(y, rho.n_max(), r, theta);
    m = y.adjoint();
    SqueezeReport rep;
    rep.norm_drift = std::abs(m.trace().real() - before);
    rep.leakage = rho.boundary_population();
    if (rep.leakage > budget)
        throw TruncationError("two-mode squeeze leaks " +
                                  std::to_string(rep.leakage) +
                                  " onto the boundary at n_max " +
                                  std::to_string(rho.n_max()),
                              suggest_larger(rho.n_max()));
    return rep;
}

TruncatedDensityMatrix loss_channel(const TruncatedDensityMatrix &rho,
                                    double t, int mode) {
    check_mode(mode);
    if (!(t > 0.0 && t <= 1.0))
        throw DomainError("loss_channel: transmissivity out of (0,1]");
    const int nm = rho.n_max(), side = rho.side(), dim = side * side;
    const int step = mode == 0 ? side : 1;
    // w[n][k] = sqrt(C(n+k,k) t^n (1-t)^k)
    std::vector<std::vector<double>> w(static_cast<std::size_t>(side));
    for (int n = 0; n <= nm; ++n) {
        w[n].resize(static_cast<std::size_t>(nm - n) + 1);
        for (int k = 0; k + n <= nm; ++k)
            w[n][k] = t == 1.0 ? (k == 0 ? 1.0 : 0.0)
                               : binomial_sqrt_weight(n, k, t);
    }
    TruncatedDensityMatrix out(nm);
    auto &o = out.matrix();
    const auto &src = rho.matrix();
    o.setZero();
    for (int j = 0; j < dim; ++j) {
        const int nb = mode == 0 ? j / side : j % side;
        for (int i = 0; i < dim; ++i) {
            const int na = mode == 0 ? i / side : i % side;
            const int kmax = std::min(nm - na, nm - nb);
            complex acc = 0.0;
            for (int k = 0; k <= kmax; ++k)
                acc += (w[na][k] * w[nb][k]) * src(i + k * step, j + k * step);
            o(i, j) = acc;
        }
    }
    return out;
}

TruncatedDensityMatrix loss_channel(const TruncatedState &state, double t,
                                    int mode) {
    return loss_channel(TruncatedDensityMatrix::from_state(state), t, mode);
}

// ---------------------------------------------------------------------------
// Linearized operators

SparseOp annihilation_operator(int dim) {
    SparseOp a(dim, dim);
    std::vector<Eigen::Triplet<complex>> t;
    for (int n = 1; n < dim; ++n)
        t.emplace_back(n - 1, n, std::sqrt(static_cast<double>(n)));
    a.setFromTriplets(t.begin(), t.end());
    return a;
}

SparseOp linearized_mode_operator(double gamma, int dim) {
    SparseOp k(dim, dim);
    std::vector<Eigen::Triplet<complex>> t;
    // row n-1 of (I - 2i gamma N) A carries the factor (1 - 2i gamma (n-1))
    for (int n = 1; n < dim; ++n)
        t.emplace_back(n - 1, n,
                       complex(1.0, -2.0 * gamma * (n - 1)) *
                           std::sqrt(static_cast<double>(n)));
    k.setFromTriplets(t.begin(), t.end());
    return k;
}

namespace {

// Linear combination of mode operators and their adjoints.
struct LinearForm {
    std::vector<complex> ann;
    std::vector<complex> cre;

    explicit LinearForm(std::size_t modes) : ann(modes), cre(modes) {}
    static LinearForm mode(std::size_t modes, std::size_t j) {
        LinearForm f(modes);
        f.ann[j] = 1.0;
        return f;
    }
    LinearForm dagger() const {
        LinearForm f(ann.size());
        for (std::size_t j = 0; j < ann.size(); ++j) {
            f.ann[j] = std::conj(cre[j]);
            f.cre[j] = std::conj(ann[j]);
        }
        return f;
    }
    LinearForm scaled(complex s) const {
        LinearForm f = *this;
        for (auto &c : f.ann)
            c *= s;
        for (auto &c : f.cre)
            c *= s;
        return f;
    }
    LinearForm plus(const LinearForm &o) const {
        LinearForm f = *this;
        for (std::size_t j = 0; j < ann.size(); ++j) {
            f.ann[j] += o.ann[j];
            f.cre[j] += o.cre[j];
        }
        return f;
    }
};

void opa(LinearForm &m1, LinearForm &m2, double r, double theta) {
    const double ch = std::cosh(r), sh = std::sinh(r);
    const complex e = std::exp(I * theta);
    LinearForm n1 = m1.scaled(ch).plus(m2.dagger().scaled(e * sh));
    LinearForm n2 = m2.scaled(ch).plus(m1.dagger().scaled(e * sh));
    m1 = std::move(n1);
    m2 = std::move(n2);
}

void beam_splitter(LinearForm &m, std::size_t vacuum_mode, double t) {
    LinearForm v = LinearForm::mode(m.ann.size(), vacuum_mode);
    m = m.scaled(std::sqrt(t)).plus(v.scaled(std::sqrt(1.0 - t)));
}

// Tensor space of the seed and vacuum ancilla modes.
class ModeSpace {
  public:
    ModeSpace(const SparseOp &seed_op, std::vector<int> dims)
        : dims_(std::move(dims)) {
        total_ = 1;
        for (int d : dims_)
            total_ *= d;
        for (std::size_t j = 0; j < dims_.size(); ++j) {
            const SparseOp local =
                j == 0 ? seed_op : annihilation_operator(dims_[j]);
            ops_.push_back(embed(local, j));
            adj_.push_back(SparseOp(ops_.back().adjoint()));
        }
    }

    int dim() const { return total_; }

    SparseOp materialize(const LinearForm &f) const {
        SparseOp out(total_, total_);
        for (std::size_t j = 0; j < dims_.size(); ++j) {
            if (f.ann[j] != 0.0)
                out += f.ann[j] * ops_[j];
            if (f.cre[j] != 0.0)
                out += f.cre[j] * adj_[j];
        }
        return out;
    }

  private:
    SparseOp embed(const SparseOp &local, std::size_t j) const {
        int left = 1, right = 1;
        for (std::size_t k = 0; k < j; ++k)
            left *= dims_[k];
        for (std::size_t k = j + 1; k < dims_.size(); ++k)
            right *= dims_[k];
        const int d = dims_[j];
        std::vector<Eigen::Triplet<complex>> t;
        for (int o = 0; o < local.outerSize(); ++o) {
            for (SparseOp::InnerIterator it(local, o); it; ++it) {
                for (int l = 0; l < left; ++l)
                    for (int q = 0; q < right; ++q)
                        t.emplace_back(
                            (l * d + static_cast<int>(it.row())) * right + q,
                            (l * d + static_cast<int>(it.col())) * right + q,
                            it.value());
            }
        }
        SparseOp e(total_, total_);
        e.setFromTriplets(t.begin(), t.end());
        return e;
    }

    std::vector<int> dims_;
    int total_ = 1;
    std::vector<SparseOp> ops_;
    std::vector<SparseOp> adj_;
};

OracleResult simulate_linearized(const InterferometerConfig &cfg) {
    const bool lossy = !cfg.lossless();
    // modes: seed, idler, then internal loss ancillas (both arms) and the
    // external loss ancilla
    std::vector<int> dims = {coherent_cutoff(cfg.alpha) + 1 + kSeedHeadroom,
                             kIdlerLevels};
    if (lossy)
        dims.insert(dims.end(), {kAncillaLevels, kAncillaLevels, kAncillaLevels});
    const std::size_t modes = dims.size();
    const ModeSpace space(linearized_mode_operator(cfg.gamma, dims[0]), dims);

    Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(space.dim());
    const Eigen::VectorXcd seed = coherent_state(cfg.alpha, dims[0] - 1);
    const int stride = space.dim() / dims[0];
    for (int n = 0; n < dims[0]; ++n)
        psi[n * stride] = seed[n];

    LinearForm m1 = LinearForm::mode(modes, 0);
    LinearForm m2 = LinearForm::mode(modes, 1);
    opa(m1, m2, cfg.r1, cfg.theta1);

    OracleResult res;
    {
        const SparseOp c = space.materialize(m1);
        const SparseOp b = space.materialize(m2);
        const Eigen::VectorXcd cpsi = c * psi, bpsi = b * psi;
        const double e1 = cpsi.squaredNorm(), e2 = bpsi.squaredNorm();
        // centred vectors avoid the <n^2> - <n>^2 cancellation at large alpha
        const Eigen::VectorXcd d1 = c.adjoint() * cpsi - e1 * psi;
        const Eigen::VectorXcd d2 = b.adjoint() * bpsi - e2 * psi;
        res.internal.var1 = d1.squaredNorm();
        res.internal.var2 = d2.squaredNorm();
        res.internal.cov = d1.dot(d2).real();
    }

    if (cfg.mu < 1.0) {
        beam_splitter(m1, 2, cfg.mu);
        beam_splitter(m2, 3, cfg.mu);
    }
    m1 = m1.scaled(std::exp(I * cfg.phi));
    opa(m1, m2, cfg.r2, cfg.theta2);
    if (cfg.eta < 1.0)
        beam_splitter(m1, 4, cfg.eta);

    const SparseOp f = space.materialize(m1);
    const Eigen::VectorXcd v1 = f * psi;
    const Eigen::VectorXcd v2 = f * v1;
    res.moments.m1 = psi.dot(v1);
    res.moments.m2 = psi.dot(v2);
    res.moments.n1 = v1.squaredNorm();
    res.moments.n2 = v2.squaredNorm();
    res.n_max = dims[0] - 1;
    return res;
}

OracleResult simulate_exact_once(const InterferometerConfig &cfg, int n_max,
                                 const OracleOptions &opt) {
    const bool dm_path = !cfg.lossless() || opt.force_density_matrix;
    if (dm_path && n_max > kMaxDensityNmax)
        throw TruncationError("density-matrix path is limited to n_max " +
                                  std::to_string(kMaxDensityNmax),
                              n_max);
    TruncatedState st =
        TruncatedState::product(coherent_state(cfg.alpha, n_max), n_max);
    apply_kerr(st, cfg.gamma, 0);
    OracleResult res;
    res.n_max = n_max;
    res.leakage =
        two_mode_squeeze(st, cfg.r1, cfg.theta1, opt.truncation_budget).leakage;
    res.internal = st.number_stats();
    if (!dm_path) {
        phase_shift(st, cfg.phi, 0);
        res.leakage = std::max(
            res.leakage,
            two_mode_squeeze(st, cfg.r2, cfg.theta2, opt.truncation_budget)
                .leakage);
        res.moments = st.moments(0);
        return res;
    }
    auto rho = TruncatedDensityMatrix::from_state(st);
    if (cfg.mu < 1.0 || opt.force_density_matrix) {
        rho = loss_channel(rho, cfg.mu, 0);
        rho = loss_channel(rho, cfg.mu, 1);
    }
    phase_shift(rho, cfg.phi, 0);
    res.leakage = std::max(
        res.leakage,
        two_mode_squeeze(rho, cfg.r2, cfg.theta2, opt.truncation_budget)
            .leakage);
    if (cfg.eta < 1.0 || opt.force_density_matrix)
        rho = loss_channel(rho, cfg.eta, 0);
    res.moments = rho.moments(0);
    return res;
}

double moment_change(const OracleResult &a, const OracleResult &b) {
    auto rel = [](complex x, complex y) {
        return std::abs(x - y) / (1.0 + std::abs(y));
    };
    double d = std::max({rel(a.moments.m1, b.moments.m1),
                         rel(a.moments.m2, b.moments.m2),
                         rel(a.moments.n1, b.moments.n1),
                         rel(a.moments.n2, b.moments.n2)});
    d = std::max({d, rel(a.internal.var1, b.internal.var1),
                  rel(a.internal.var2, b.internal.var2),
                  rel(a.internal.cov, b.internal.cov)});
    return d;
}

} // namespace

int auto_n_max(const InterferometerConfig &cfg) {
    const double headroom = std::ceil(10.0 * std::exp(2.0 * (cfg.r1 + cfg.r2)));
    const double n = coherent_cutoff(cfg.alpha) + headroom;
    return static_cast<int>(std::min<double>(n, kMaxAutoNmax));
}

OracleResult simulate(const InterferometerConfig &cfg, KerrVariant variant,
                      const OracleOptions &opt) {
    validate_config(cfg);
    if (variant == KerrVariant::linearized)
        return simulate_linearized(cfg);

    const bool dm_path = !cfg.lossless() || opt.force_density_matrix;
    int n = opt.n_max > 0 ? opt.n_max : auto_n_max(cfg);
    if (dm_path && opt.n_max == 0)
        n = std::min(n, kMaxDensityNmax);
    OracleResult res = simulate_exact_once(cfg, n, opt);
    // the dense path is bounded by memory; its leakage budget is the guard
    if (opt.convergence_check && !dm_path) {
        const int n2 = static_cast<int>(std::ceil(1.25 * n));
        const OracleResult wider = simulate_exact_once(cfg, n2, opt);
        if (moment_change(res, wider) >= 1e-10)
            throw TruncationError("moments not converged between n_max " +
                                      std::to_string(n) + " and " +
                                      std::to_string(n2),
                                  suggest_larger(n2));
    }
    return res;
}

SensitivityResult oracle_phase_sensitivity(const InterferometerConfig &cfg,
                                           DetectionScheme scheme,
                                           KerrVariant variant, double h,
                                           const OracleOptions &opt) {
    if (!(h >= 1e-7 && h <= 1e-3))
        throw DomainError("finite-difference step must lie in [1e-7, 1e-3]");
    InterferometerConfig lo = cfg, hi = cfg;
    lo.phi -= h;
    hi.phi += h;
    const MomentSet m = simulate(cfg, variant, opt).moments;
    const MomentSet ml = simulate(lo, variant, opt).moments;
    const MomentSet mh = simulate(hi, variant, opt).moments;
    if (scheme == DetectionScheme::si)
        return si_from_moments(m, (mh.n1.real() - ml.n1.real()) / (2.0 * h),
                               ResultSource::oracle);
    return hd_from_moments(m, (mh.m1 - ml.m1) / (2.0 * h),
                           ResultSource::oracle);
}

} // namespace kerrsu
