#pragma once

#include "qstirling/reservoir.hpp"

namespace qstirling::tls {

// Two-level working medium, H = (omega/2) sigma_z with levels (+omega/2, -omega/2)
// and the excited population N/(2N+1) on the upper level.

struct Populations {
    double excited = 0.0;
    double ground = 1.0;
};

enum class IsochoricStroke { bc, da };

Populations steady_state(double omega, const Reservoir& res);

double internal_energy(double omega, const Reservoir& res);

double entropy(double omega, const Reservoir& res);

// F_r(omega) = S_r { 1 + (T/omega) log[(1+S_r+e^{-omega/T}(1-S_r)) / (1+S_r+e^{omega/T}(1-S_r))] }.
double coefficient_f(double omega, double temperature, double r);

// G(omega) = S_r (T/omega) log[ ... same argument ... ]; F = S_r + G.
double coefficient_g(double omega, double temperature, double r);

// Q_AB, heat absorbed in the hot isothermal stroke A(omega2) -> B(omega1).
double heat_isothermal_hot(double omega1, double omega2, const Reservoir& hot);

// Independent r = 0 code path for the thermal hot isothermal heat.
double heat_isothermal_hot_thermal(double omega1, double omega2, double t_hot);

// W_AB, first-law consistent with heat_isothermal_hot and internal_energy.
double work_isothermal_hot(double omega1, double omega2, const Reservoir& hot);

// Q_CD and W_CD of the cold isothermal stroke C(omega1) -> D(omega2).
// The cold bath must be thermal.
double heat_isothermal_cold(double omega1, double omega2, const Reservoir& cold);
double work_isothermal_cold(double omega1, double omega2, const Reservoir& cold);

// Q_BC (at omega1) or Q_DA (at omega2); equals the Delta U of the stroke.
double heat_isochoric(double omega, const Reservoir& hot, const Reservoir& cold,
                      IsochoricStroke stroke);

// Thermal temperature reproducing the squeezed steady-state populations.
double effective_temperature(double omega, double temperature, double r);

}  // namespace qstirling::tls
