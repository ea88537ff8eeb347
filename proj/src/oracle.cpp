#include "qstirling/oracle.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <algorithm>
#include <cmath>
#include <complex>
#include <sstream>
#include <stdexcept>

namespace qstirling::oracle {

using Complex = std::complex<double>;
using Matrix2c = Eigen::Matrix2cd;

namespace {

constexpr Complex k_i{0.0, 1.0};

Matrix2c sigma_minus() {
    Matrix2c m = Matrix2c::Zero();
    m(1, 0) = 1.0;  // |g><e| in the {e, g} basis
    return m;
}

// The squeezed-bath generator of the two-level master equation, applied to rho.
Matrix2c lindblad_rhs(const Matrix2c& rho, double gamma, double big_n, Complex m_coef) {
    static const Matrix2c sm = sigma_minus();
    static const Matrix2c sp = sm.adjoint();
    static const Matrix2c sp_sm = sp * sm;
    static const Matrix2c sm_sp = sm * sp;

    Matrix2c out = gamma * (big_n + 1.0) *
                   (sm * rho * sp - 0.5 * (sp_sm * rho + rho * sp_sm));
    out += gamma * big_n * (sp * rho * sm - 0.5 * (sm_sp * rho + rho * sm_sp));
    out -= gamma * m_coef * (sp * rho * sp);
    out -= gamma * std::conj(m_coef) * (sm * rho * sm);
    return out;
}

double min_eigenvalue_2x2(const Matrix2c& rho) {
    const double a = rho(0, 0).real();
    const double d = rho(1, 1).real();
    const double off = std::abs(rho(0, 1));
    const double mid = 0.5 * (a + d);
    const double rad = std::sqrt(0.25 * (a - d) * (a - d) + off * off);
    return mid - rad;
}

double trace_distance_2x2(const Matrix2c& a, const Matrix2c& b) {
    const Matrix2c d = a - b;
    // Hermitian 2x2: eigenvalues are mid +- rad.
    const double x = d(0, 0).real();
    const double y = d(1, 1).real();
    const double off = std::abs(d(0, 1));
    const double mid = 0.5 * (x + y);
    const double rad = std::sqrt(0.25 * (x - y) * (x - y) + off * off);
    return 0.5 * (std::abs(mid + rad) + std::abs(mid - rad));
}

Matrix2c rk4_step(const Matrix2c& rho, double dt, double gamma, double big_n, Complex m_coef) {
    const Matrix2c k1 = lindblad_rhs(rho, gamma, big_n, m_coef);
    const Matrix2c k2 = lindblad_rhs(rho + 0.5 * dt * k1, gamma, big_n, m_coef);
    const Matrix2c k3 = lindblad_rhs(rho + 0.5 * dt * k2, gamma, big_n, m_coef);
    const Matrix2c k4 = lindblad_rhs(rho + dt * k3, gamma, big_n, m_coef);
    return rho + (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
}

}  // namespace

void DensityMatrix::validate(const Tolerances& tol) const {
    if (mat.rows() != mat.cols() || mat.rows() < 1)
        throw std::domain_error("DensityMatrix: must be square and non-empty");
    const double herm = (mat - mat.adjoint()).cwiseAbs().maxCoeff();
    if (herm > tol.density_hermiticity)
        throw std::domain_error("DensityMatrix: not Hermitian within tolerance");
    const double tr_err = std::abs(mat.trace() - Complex(1.0, 0.0));
    if (tr_err > tol.density_trace)
        throw std::domain_error("DensityMatrix: trace differs from 1 beyond tolerance");
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(mat, Eigen::EigenvaluesOnly);
    if (es.eigenvalues().minCoeff() < tol.density_positivity)
        throw std::domain_error("DensityMatrix: negative eigenvalue beyond tolerance");
}

double trace_distance(const DensityMatrix& a, const DensityMatrix& b) {
    if (a.mat.rows() != b.mat.rows())
        throw std::invalid_argument("trace_distance: dimension mismatch");
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(a.mat - b.mat, Eigen::EigenvaluesOnly);
    return 0.5 * es.eigenvalues().cwiseAbs().sum();
}

void LindbladParams::validate() const {
    reservoir.validate();
    if (!(gamma > 0.0)) throw std::domain_error("LindbladParams: gamma must be > 0");
    if (!(omega > 0.0)) throw std::domain_error("LindbladParams: omega must be > 0");
}

DensityMatrix lindblad_steady_state_tls(const LindbladParams& params, IntegrationStats* stats) {
    params.validate();
    const Occupancy occ = squeezed_occupancy(params.omega, params.reservoir);
    const double r = params.reservoir.squeeze_r;
    const double phi = params.reservoir.squeeze_phi;
    const Complex m_coef =
        -std::cosh(r) * std::sinh(r) * std::exp(k_i * phi) * (2.0 * occ.n + 1.0);

    // Generic initial state with populations and coherences.
    Matrix2c rho;
    rho << Complex(0.7, 0.0), Complex(0.2, 0.1), Complex(0.2, -0.1), Complex(0.3, 0.0);

    const double rate = params.gamma * (2.0 * occ.big_n + 1.0);
    double dt = 0.05 / rate;
    const double step_tol = 1e-14;
    const Tolerances tol;

    IntegrationStats st;
    st.min_eigenvalue = min_eigenvalue_2x2(rho);

    constexpr long k_max_steps = 2'000'000;
    double since_check = 0.0;
    Matrix2c rho_checkpoint = rho;
    const double check_interval = 1.0 / rate;

    while (st.steps < k_max_steps) {
        // Step doubling: one full step vs two halves.
        const Matrix2c full = rk4_step(rho, dt, params.gamma, occ.big_n, m_coef);
        Matrix2c half = rk4_step(rho, 0.5 * dt, params.gamma, occ.big_n, m_coef);
        half = rk4_step(half, 0.5 * dt, params.gamma, occ.big_n, m_coef);
        const double err = (full - half).cwiseAbs().maxCoeff();
        if (err > step_tol && dt > 1e-6 / rate) {
            dt *= 0.5;
            continue;
        }
        rho = half;
        // Keep the trajectory exactly trace-one and Hermitian.
        rho = 0.5 * (rho + rho.adjoint().eval());
        rho /= rho.trace().real();
        st.steps++;
        st.elapsed_time += dt;
        since_check += dt;
        st.min_eigenvalue = std::min(st.min_eigenvalue, min_eigenvalue_2x2(rho));
        if (err < 0.01 * step_tol) dt *= 1.9;

        if (since_check >= check_interval) {
            st.final_delta = trace_distance_2x2(rho, rho_checkpoint);
            if (st.final_delta < tol.convergence_trace_norm &&
                st.elapsed_time > 8.0 / rate) {
                if (stats) *stats = st;
                return DensityMatrix{rho};
            }
            rho_checkpoint = rho;
            since_check = 0.0;
        }
    }
    std::ostringstream msg;
    msg << "lindblad_steady_state_tls: no convergence after " << st.steps
        << " steps (t = " << st.elapsed_time << ", last delta = " << st.final_delta
        << ", gamma = " << params.gamma << ", N = " << occ.big_n << ")";
    throw std::runtime_error(msg.str());
}

DensityMatrix lindblad_stationary_state_tls(const LindbladParams& params) {
    params.validate();
    const Occupancy occ = squeezed_occupancy(params.omega, params.reservoir);
    const double r = params.reservoir.squeeze_r;
    const double phi = params.reservoir.squeeze_phi;
    const Complex m_coef =
        -std::cosh(r) * std::sinh(r) * std::exp(k_i * phi) * (2.0 * occ.n + 1.0);

    // Column-stacked superoperator assembled by applying the generator to the
    // matrix units, then solved together with the trace constraint.
    Eigen::Matrix<Complex, 5, 4> sys = Eigen::Matrix<Complex, 5, 4>::Zero();
    for (int j = 0; j < 2; ++j) {
        for (int i = 0; i < 2; ++i) {
            Matrix2c unit = Matrix2c::Zero();
            unit(i, j) = 1.0;
            const Matrix2c image = lindblad_rhs(unit, params.gamma, occ.big_n, m_coef);
            const int col = i + 2 * j;
            for (int jj = 0; jj < 2; ++jj)
                for (int ii = 0; ii < 2; ++ii) sys(ii + 2 * jj, col) = image(ii, jj);
        }
    }
    sys(4, 0) = 1.0;  // trace row: rho_00 + rho_11 = 1
    sys(4, 3) = 1.0;
    Eigen::Matrix<Complex, 5, 1> rhs = Eigen::Matrix<Complex, 5, 1>::Zero();
    rhs(4) = 1.0;

    const Eigen::Vector4cd v = sys.colPivHouseholderQr().solve(rhs);
    const double residual = (sys * v - rhs).norm();
    if (residual > 1e-10)
        throw std::runtime_error("lindblad_stationary_state_tls: stationary solve residual " +
                                 std::to_string(residual));
    Matrix2c rho;
    rho << v(0), v(2), v(1), v(3);
    rho = 0.5 * (rho + rho.adjoint().eval());
    rho /= rho.trace().real();
    return DensityMatrix{rho};
}

int choose_cutoff(double omega, double temperature, double r) {
    if (!(omega > 0.0) || !(temperature > 0.0))
        throw std::domain_error("choose_cutoff: omega and T must be > 0");
    if (r < 0.0) throw std::domain_error("choose_cutoff: r must be >= 0");
    const double x = omega / temperature;
    const double n = thermal_occupation(omega, temperature);
    // Gibbs tail e^{-Dx} < 1e-14. After squeezing the number distribution
    // decays geometrically with the largest Gaussian variance
    // V = (n + 1/2) e^{2r}; its tail ratio is (V - 1/2)/(V + 1/2).
    const double d_gibbs = 14.0 * std::log(10.0) / x;
    const double v_max = (n + 0.5) * std::exp(2.0 * r);
    const double kappa = std::log((v_max + 0.5) / (v_max - 0.5));
    const double d_squeezed = 12.0 * std::log(10.0) / kappa;
    const int d = static_cast<int>(std::ceil(1.15 * std::max(d_gibbs, d_squeezed))) + 24;
    return std::clamp(d, 32, 1024);
}

SqueezedThermalState squeezed_thermal_state_ho(double omega, double temperature, double r,
                                               double theta, int cutoff,
                                               const Tolerances& tol) {
    if (!(omega > 0.0) || !(temperature > 0.0))
        throw std::domain_error("squeezed_thermal_state_ho: omega and T must be > 0");
    if (r < 0.0) throw std::domain_error("squeezed_thermal_state_ho: r must be >= 0");
    if (cutoff < 2) throw std::invalid_argument("squeezed_thermal_state_ho: cutoff too small");

    const double x = omega / temperature;
    const double gibbs_tail = std::exp(-x * cutoff);
    if (gibbs_tail > tol.gibbs_tail)
        throw std::invalid_argument(
            "squeezed_thermal_state_ho: cutoff leaves Gibbs tail " + std::to_string(gibbs_tail) +
            " > 1e-14; increase cutoff");

    // Truncated Gibbs state, renormalised on the kept levels.
    Eigen::VectorXd gibbs(cutoff);
    for (int k = 0; k < cutoff; ++k) gibbs(k) = std::exp(-x * k);
    gibbs /= gibbs.sum();

    // Generator (xi* a^2 - xi a'^2)/2 with xi = r e^{i theta} is anti-Hermitian;
    // theta = 0 keeps everything real, worth a separate path for speed.
    const bool real_path = theta == 0.0;
    Eigen::MatrixXcd rho_sq;
    double trace_loss = 0.0;

    if (real_path) {
        Eigen::MatrixXd gen = Eigen::MatrixXd::Zero(cutoff, cutoff);
        for (int k = 0; k + 2 <= cutoff - 1; ++k) {
            const double amp = std::sqrt(static_cast<double>(k + 1) * (k + 2));
            gen(k, k + 2) = 0.5 * r * amp;        // xi* a^2 term
            gen(k + 2, k) = -0.5 * r * amp;       // -xi a'^2 term
        }
        const Eigen::MatrixXd squeeze = gen.exp();
        const Eigen::MatrixXd rho_real =
            squeeze * gibbs.asDiagonal() * squeeze.transpose();
        trace_loss = std::abs(rho_real.trace() - 1.0);
        rho_sq = rho_real.cast<Complex>();
    } else {
        const Complex xi = r * std::exp(k_i * theta);
        Eigen::MatrixXcd gen = Eigen::MatrixXcd::Zero(cutoff, cutoff);
        for (int k = 0; k + 2 <= cutoff - 1; ++k) {
            const double amp = std::sqrt(static_cast<double>(k + 1) * (k + 2));
            gen(k, k + 2) = 0.5 * std::conj(xi) * amp;
            gen(k + 2, k) = -0.5 * xi * amp;
        }
        const Eigen::MatrixXcd squeeze = gen.exp();
        rho_sq = squeeze * gibbs.asDiagonal().toDenseMatrix().cast<Complex>() *
                 squeeze.adjoint();
        trace_loss = std::abs(rho_sq.trace() - Complex(1.0, 0.0));
    }

    rho_sq /= rho_sq.trace().real();

    // Truncation-induced non-unitarity of the squeeze, seen as trace loss.
    if (trace_loss > tol.post_squeeze_tail)
        throw std::runtime_error(
            "squeezed_thermal_state_ho: truncation non-unitarity " +
            std::to_string(trace_loss) + " > 1e-9; increase cutoff");

    // Population stranded near the truncation edge after squeezing.
    const int tail_levels = std::max(4, cutoff / 16);
    double tail = 0.0;
    for (int k = cutoff - tail_levels; k < cutoff; ++k) tail += rho_sq(k, k).real();
    if (tail > tol.post_squeeze_tail)
        throw std::runtime_error(
            "squeezed_thermal_state_ho: post-squeeze tail population " + std::to_string(tail) +
            " > 1e-9; increase cutoff");

    SqueezedThermalState out;
    out.rho = DensityMatrix{std::move(rho_sq)};
    out.truncation_loss = trace_loss;
    out.tail_population = tail;
    out.cutoff = cutoff;
    return out;
}

double von_neumann_entropy(const DensityMatrix& rho) {
    if (rho.mat.rows() != rho.mat.cols() || rho.mat.rows() < 1)
        throw std::domain_error("von_neumann_entropy: invalid density matrix");
    if ((rho.mat - rho.mat.adjoint()).cwiseAbs().maxCoeff() > 1e-9)
        throw std::domain_error("von_neumann_entropy: matrix not Hermitian");
    if (std::abs(rho.mat.trace() - Complex(1.0, 0.0)) > 1e-9)
        throw std::domain_error("von_neumann_entropy: trace differs from 1");
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(rho.mat, Eigen::EigenvaluesOnly);
    if (es.eigenvalues().minCoeff() < -1e-9)
        throw std::domain_error("von_neumann_entropy: matrix not positive semidefinite");
    double s = 0.0;
    for (double lam : es.eigenvalues()) {
        if (lam > 0.0) s -= lam * std::log(lam);
    }
    return std::max(s, 0.0);
}

double energy_expectation(const DensityMatrix& rho, const Eigen::VectorXd& diag_hamiltonian) {
    if (rho.mat.rows() != diag_hamiltonian.size())
        throw std::invalid_argument("energy_expectation: dimension mismatch");
    Complex tr = 0.0;
    for (int k = 0; k < diag_hamiltonian.size(); ++k)
        tr += rho.mat(k, k) * diag_hamiltonian(k);
    const Tolerances tol;
    if (std::abs(tr.imag()) > tol.trace_imag_residue * std::max(1.0, std::abs(tr.real())))
        throw std::runtime_error("energy_expectation: imaginary residue beyond tolerance");
    return tr.real();
}

double energy_expectation(const DensityMatrix& rho, const Eigen::MatrixXcd& hamiltonian) {
    if (rho.mat.rows() != hamiltonian.rows() || rho.mat.cols() != hamiltonian.cols())
        throw std::invalid_argument("energy_expectation: dimension mismatch");
    const Complex tr = (rho.mat * hamiltonian).trace();
    const Tolerances tol;
    if (std::abs(tr.imag()) > tol.trace_imag_residue * std::max(1.0, std::abs(tr.real())))
        throw std::runtime_error("energy_expectation: imaginary residue beyond tolerance");
    return tr.real();
}

double bosonic_entropy_from_n(double n_mean) {
    if (n_mean < 0.0) throw std::domain_error("bosonic_entropy_from_n: requires N >= 0");
    if (n_mean == 0.0) return 0.0;
    return std::log1p(n_mean) + n_mean * std::log1p(1.0 / n_mean);
}

DensityMatrix thermal_state_with_mean(double n_mean, int cutoff) {
    if (n_mean < 0.0) throw std::domain_error("thermal_state_with_mean: requires N >= 0");
    if (cutoff < 2) throw std::invalid_argument("thermal_state_with_mean: cutoff too small");
    Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(cutoff, cutoff);
    if (n_mean == 0.0) {
        rho(0, 0) = 1.0;
        return DensityMatrix{rho};
    }
    const double q = n_mean / (n_mean + 1.0);
    double norm = 0.0;
    for (int k = 0; k < cutoff; ++k) {
        const double p = std::pow(q, k);
        rho(k, k) = p;
        norm += p;
    }
    rho /= norm;
    return DensityMatrix{rho};
}

DensityMatrix tls_closed_form_state(double omega, const Reservoir& res) {
    const Occupancy occ = squeezed_occupancy(omega, res);
    const double denom = 2.0 * occ.big_n + 1.0;
    Matrix2c rho = Matrix2c::Zero();
    rho(0, 0) = occ.big_n / denom;
    rho(1, 1) = (occ.big_n + 1.0) / denom;
    return DensityMatrix{rho};
}

Eigen::VectorXd tls_hamiltonian_diag(double omega) {
    Eigen::VectorXd h(2);
    h << omega / 2.0, -omega / 2.0;
    return h;
}

Eigen::VectorXd ho_hamiltonian_diag(double omega, int n) {
    Eigen::VectorXd h(n);
    for (int k = 0; k < n; ++k) h(k) = omega * (k + 0.5);
    return h;
}

}  // namespace qstirling::oracle
