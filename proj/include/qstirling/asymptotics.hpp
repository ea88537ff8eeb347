#pragma once

#include <functional>
#include <optional>

#include "qstirling/cycle.hpp"

namespace qstirling::asym {

enum class Order { first, second };
enum class Regime { high_t, low_t };

// One regime evaluation: the series work at (omega1, omega2), the analytic
// work-maximising frequency when a closed form exists (none in the TLS
// high-T regime), and the matching efficiency-at-maximum-work formula.
struct RegimeReport {
    Regime regime = Regime::high_t;
    Order order = Order::second;
    double w_approx = 0.0;
    std::optional<double> omega2_star;
    double eta_mw = 0.0;
};

RegimeReport tls_regime_report(Regime regime, double omega1, double omega2, double t_hot,
                               double t_cold, double r, Order order = Order::second);
RegimeReport ho_regime_report(Regime regime, double omega1, double omega2, double t_hot,
                              double t_cold, double r, Order order = Order::second);

// --- Two-level medium ---

// High-T (omega/T_h -> 0) first-order work; no interior maximum in omega2.
double tls_work_high_t(double omega1, double omega2, double t_hot, double t_cold, double r);

// Low-T (omega/T_c -> infinity) work, second order in omega/T_h.
double tls_work_low_t(double omega1, double omega2, double t_hot, double r,
                      Order order = Order::second);

// omega2* = 2 T_h / (4 - 3 S_r^2).
double tls_omega2_max_low_t(double t_hot, double r);

// First order: the Otto efficiency 1 - omega1/omega2 (r-independent).
double tls_eta_mw_low_t(double omega1, double omega2, double t_hot, double r,
                        Order order = Order::first);

// Closed-form high-T efficiency; see the implementation note for the
// grouping adopted. Numeric maximisation of the exact work stays the
// authoritative route.
double tls_eta_mw_high_t(double omega1, double omega2, double eta_carnot, double r);

// --- Harmonic-oscillator medium ---

double ho_work_high_t(double omega1, double omega2, double t_hot, double t_cold, double r,
                      Order order = Order::second);
double ho_work_low_t(double omega1, double omega2, double t_hot, double r,
                     Order order = Order::second);

double ho_omega2_max_high_t(double t_cold, double eta_carnot, double r);
double ho_omega2_max_low_t(double t_hot, double r);

double ho_eta_mw_high_t(double omega1, double omega2, double eta_carnot, double r);
double ho_eta_mw_low_t(double omega1, double omega2, double t_hot, double r);

// --- Numeric maximiser (ground truth) ---

struct MaxWork {
    double omega2_star = 0.0;
    double w_star = 0.0;
    bool interior = true;  // false: maximum sits on a bracket edge
};

// Deterministic golden-section search for the maximum of f over [lo, hi],
// to relative tolerance rel_tol in the abscissa.
MaxWork numeric_max_work(const std::function<double(double)>& f, double lo, double hi,
                         double rel_tol = 1e-10);

// Maximise the exact cycle work over omega2 at fixed omega1 and reservoirs.
MaxWork numeric_max_work_cycle(Medium medium, double omega1, const Reservoir& hot,
                               const Reservoir& cold, double omega2_lo, double omega2_hi,
                               double rel_tol = 1e-10);

}  // namespace qstirling::asym
