#pragma once

#include "qstirling/reservoir.hpp"
#include "qstirling/tls.hpp"

namespace qstirling::ho {

using tls::IsochoricStroke;

// Harmonic-oscillator working medium, H = omega (n_hat + 1/2).

// U = omega (n + 1/2) cosh(2r) = (omega/2) cosh(2r) coth(omega/2T).
double internal_energy(double omega, const Reservoir& res);

// F_r(omega) = (1/2)[1 + cosh(2r) coth(omega/2T)]; identically N + 1.
double coefficient_f(double omega, double temperature, double r);

double heat_isothermal_hot(double omega1, double omega2, const Reservoir& hot);
double work_isothermal_hot(double omega1, double omega2, const Reservoir& hot);

double heat_isothermal_cold(double omega1, double omega2, const Reservoir& cold);
double work_isothermal_cold(double omega1, double omega2, const Reservoir& cold);

double heat_isochoric(double omega, const Reservoir& hot, const Reservoir& cold,
                      IsochoricStroke stroke);

// W_AB + W_CD; closes the cycle against the four heats.
double total_work(double omega1, double omega2, const Reservoir& hot, const Reservoir& cold);

}  // namespace qstirling::ho
