#pragma once

#include <Eigen/Dense>
#include <complex>

#include "qstirling/reservoir.hpp"

namespace qstirling::oracle {

// First-principles verification layer. Everything here works on explicit
// matrices and never routes through the closed forms it is used to check.

// Named tolerances used by the verification suite.
struct Tolerances {
    double density_hermiticity = 1e-12;
    double density_trace = 1e-12;
    double density_positivity = -1e-12;
    double tls_closed_form_abs = 1e-10;        // entropy/energy vs matrix route
    double lindblad_trace_distance = 1e-8;     // integrated state vs closed form
    double lindblad_route_agreement = 1e-9;    // integration vs stationary solve
    double gamma_independence = 1e-9;
    double phase_independence = 1e-9;
    double ho_energy_rel = 1e-8;
    double cutoff_cauchy = 1e-9;
    double positivity_floor = -1e-10;          // min eigenvalue along trajectory
    double trace_imag_residue = 1e-12;
    double convergence_trace_norm = 1e-12;
    double gibbs_tail = 1e-14;
    double post_squeeze_tail = 1e-9;
};

inline constexpr double k_default_integration_horizon = 64.0;

struct DensityMatrix {
    Eigen::MatrixXcd mat;

    int dim() const { return static_cast<int>(mat.rows()); }
    void validate(const Tolerances& tol = Tolerances{}) const;
};

double trace_distance(const DensityMatrix& a, const DensityMatrix& b);

struct LindbladParams {
    double gamma = 1.0;
    Reservoir reservoir;
    double omega = 1.0;

    void validate() const;
};

struct IntegrationStats {
    long steps = 0;
    double elapsed_time = 0.0;       // simulated time
    double min_eigenvalue = 0.0;     // most negative eigenvalue seen at accepted steps
    double final_delta = 0.0;        // last successive-state trace distance
};

// Stationary 2x2 state of the squeezed-bath master equation, by adaptive
// explicit time integration from a generic mixed state with coherences.
// Throws on non-convergence with diagnostics in the message.
DensityMatrix lindblad_steady_state_tls(const LindbladParams& params,
                                        IntegrationStats* stats = nullptr);

// Same fixed point via the vectorised generator (null-space solve).
DensityMatrix lindblad_stationary_state_tls(const LindbladParams& params);

struct SqueezedThermalState {
    DensityMatrix rho;
    double truncation_loss = 0.0;   // |Tr before renormalisation - 1|
    double tail_population = 0.0;   // mass in the top levels after squeezing
    int cutoff = 0;
};

// Truncated Gibbs state conjugated with expm of (xi* a^2 - xi a^dag^2)/2.
SqueezedThermalState squeezed_thermal_state_ho(double omega, double temperature, double r,
                                               double theta, int cutoff,
                                               const Tolerances& tol = Tolerances{});

// Smallest cutoff with an estimated post-squeeze tail below 1e-12, capped at 1024.
int choose_cutoff(double omega, double temperature, double r);

double von_neumann_entropy(const DensityMatrix& rho);

// Tr(rho H) for a diagonal Hamiltonian or a general Hermitian matrix.
double energy_expectation(const DensityMatrix& rho, const Eigen::VectorXd& diag_hamiltonian);
double energy_expectation(const DensityMatrix& rho, const Eigen::MatrixXcd& hamiltonian);

double bosonic_entropy_from_n(double n_mean);

// Diagonal thermal-form oscillator state with mean occupancy N (for entropy checks).
DensityMatrix thermal_state_with_mean(double n_mean, int cutoff);

// The closed-form TLS steady state as a matrix, for oracle comparisons.
DensityMatrix tls_closed_form_state(double omega, const Reservoir& res);

// Hamiltonians in the conventions used throughout.
Eigen::VectorXd tls_hamiltonian_diag(double omega);       // (+omega/2, -omega/2)
Eigen::VectorXd ho_hamiltonian_diag(double omega, int n); // omega (k + 1/2)

}  // namespace qstirling::oracle
