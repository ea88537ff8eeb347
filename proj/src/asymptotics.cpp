#include "qstirling/asymptotics.hpp"

#include <cmath>
#include <stdexcept>

#include "qstirling/reservoir.hpp"

namespace qstirling::asym {

namespace {

void require_positive(double v, const char* what) {
    if (!(v > 0.0)) throw std::domain_error(std::string("asymptotics: ") + what + " must be > 0");
}

}  // namespace

double tls_work_high_t(double omega1, double omega2, double t_hot, double t_cold, double r) {
    require_positive(omega1, "omega1");
    require_positive(omega2, "omega2");
    require_positive(t_hot, "t_hot");
    require_positive(t_cold, "t_cold");
    const double s = squeeze_factors(r).s_r;
    return (omega2 * omega2 - omega1 * omega1) / 8.0 * (s * (s - 2.0) / t_hot + 1.0 / t_cold);
}

double tls_work_low_t(double omega1, double omega2, double t_hot, double r, Order order) {
    require_positive(omega1, "omega1");
    require_positive(omega2, "omega2");
    require_positive(t_hot, "t_hot");
    const double first = (omega2 - omega1) / 2.0;
    if (order == Order::first) return first;
    const double s = squeeze_factors(r).s_r;
    return first + (omega2 * omega2 - omega1 * omega1) / (8.0 * t_hot) * s * (s - 2.0);
}

double tls_omega2_max_low_t(double t_hot, double r) {
    require_positive(t_hot, "t_hot");
    const double s = squeeze_factors(r).s_r;
    return 2.0 * t_hot / (4.0 - 3.0 * s * s);
}

double tls_eta_mw_low_t(double omega1, double omega2, double t_hot, double r, Order order) {
    require_positive(omega1, "omega1");
    require_positive(omega2, "omega2");
    require_positive(t_hot, "t_hot");
    if (order == Order::first) return 1.0 - omega1 / omega2;
    const double s = squeeze_factors(r).s_r;
    const double ratio2 = (omega1 * omega1) / (omega2 * omega2);
    const double num = 4.0 * t_hot / omega1 - 2.0 * s;
    const double den = 4.0 * t_hot / omega2 - s * (2.0 - s * (1.0 - ratio2));
    return 1.0 - ratio2 * num / den;
}

double tls_eta_mw_high_t(double omega1, double omega2, double eta_carnot, double r) {
    require_positive(omega1, "omega1");
    require_positive(omega2, "omega2");
    // The grouping of this second-order expression is ambiguous; the
    // reading adopted here takes the numerator as
    //   2 [ (w1/w2)^2 S (1 - eta_C) - 1 ] - (1 - (w1/w2)^2),
    // which gives eta -> 0 in the degenerate limit omega1 = omega2, r = 0.
    const double s = squeeze_factors(r).s_r;
    const double ratio2 = (omega1 * omega1) / (omega2 * omega2);
    const double one_m = 1.0 - eta_carnot;
    const double num = 2.0 * (ratio2 * s * one_m - 1.0) - (1.0 - ratio2);
    const double den = 2.0 - one_m * s * (2.0 - s * one_m * (1.0 - ratio2));
    return 1.0 + num / den;
}

double ho_work_high_t(double omega1, double omega2, double t_hot, double t_cold, double r,
                      Order order) {
    require_positive(omega1, "omega1");
    require_positive(omega2, "omega2");
    require_positive(t_hot, "t_hot");
    require_positive(t_cold, "t_cold");
    const double first = (t_hot - t_cold) * std::log(omega2 / omega1);
    if (order == Order::first) return first;
    const auto sf = squeeze_factors(r);
    const double d2 = omega2 * omega2 - omega1 * omega1;
    return first + d2 / (12.0 * t_hot * sf.s_r) -
           d2 / 24.0 * (sf.s_r / (t_hot * sf.s_2r) + 1.0 / t_cold);
}

double ho_work_low_t(double omega1, double omega2, double t_hot, double r, Order order) {
    require_positive(omega1, "omega1");
    require_positive(omega2, "omega2");
    require_positive(t_hot, "t_hot");
    const double first = t_hot * std::log(omega2 / omega1) + (omega1 - omega2) / 2.0;
    if (order == Order::first) return first;
    // Kept literally (natural units); the 1/S_r piece carries no 1/T_h.
    const auto sf = squeeze_factors(r);
    const double d2 = omega1 * omega1 - omega2 * omega2;
    return first + d2 / 12.0 * (1.0 / sf.s_r - sf.s_r / (2.0 * sf.s_2r * t_hot));
}

double ho_omega2_max_high_t(double t_cold, double eta_carnot, double r) {
    require_positive(t_cold, "t_cold");
    if (!(eta_carnot > 0.0 && eta_carnot < 1.0))
        throw std::domain_error("asymptotics: eta_carnot must be in (0,1)");
    const auto sf = squeeze_factors(r);
    return 2.0 * std::sqrt(3.0 * t_cold * eta_carnot) /
           std::sqrt(1.0 + sf.s_r * sf.s_r * (1.0 - eta_carnot) / sf.s_2r);
}

double ho_omega2_max_low_t(double t_hot, double r) {
    require_positive(t_hot, "t_hot");
    const auto sf = squeeze_factors(r);
    return (1.0 + sf.s_2r) / 2.0 * t_hot *
           (-3.0 + std::sqrt(3.0 * (11.0 - 4.0 * sf.s_r * sf.s_r)));
}

double ho_eta_mw_high_t(double omega1, double omega2, double eta_carnot, double r) {
    require_positive(omega1, "omega1");
    require_positive(omega2, "omega2");
    const double s = squeeze_factors(r).s_r;
    const double lg = std::log(omega2 / omega1);
    return eta_carnot * lg / (eta_carnot - 1.0 + 1.0 / s + lg);
}

double ho_eta_mw_low_t(double omega1, double omega2, double t_hot, double r) {
    require_positive(omega1, "omega1");
    require_positive(omega2, "omega2");
    require_positive(t_hot, "t_hot");
    const double s_inv = std::cosh(2.0 * r);
    const double lg = std::log(omega2 / omega1);
    return 1.0 + (omega1 - 2.0 * t_hot * s_inv) / (-omega2 + 2.0 * t_hot * (s_inv + lg));
}

RegimeReport tls_regime_report(Regime regime, double omega1, double omega2, double t_hot,
                               double t_cold, double r, Order order) {
    RegimeReport rep;
    rep.regime = regime;
    rep.order = order;
    if (regime == Regime::high_t) {
        rep.w_approx = tls_work_high_t(omega1, omega2, t_hot, t_cold, r);
        // no interior maximum in this regime, so no omega2*
        rep.eta_mw = tls_eta_mw_high_t(omega1, omega2, 1.0 - t_cold / t_hot, r);
    } else {
        rep.w_approx = tls_work_low_t(omega1, omega2, t_hot, r, order);
        rep.omega2_star = tls_omega2_max_low_t(t_hot, r);
        rep.eta_mw = tls_eta_mw_low_t(omega1, *rep.omega2_star, t_hot, r, order);
    }
    return rep;
}

RegimeReport ho_regime_report(Regime regime, double omega1, double omega2, double t_hot,
                              double t_cold, double r, Order order) {
    RegimeReport rep;
    rep.regime = regime;
    rep.order = order;
    const double eta_c = 1.0 - t_cold / t_hot;
    if (regime == Regime::high_t) {
        rep.w_approx = ho_work_high_t(omega1, omega2, t_hot, t_cold, r, order);
        rep.omega2_star = ho_omega2_max_high_t(t_cold, eta_c, r);
        rep.eta_mw = ho_eta_mw_high_t(omega1, *rep.omega2_star, eta_c, r);
    } else {
        rep.w_approx = ho_work_low_t(omega1, omega2, t_hot, r, order);
        rep.omega2_star = ho_omega2_max_low_t(t_hot, r);
        rep.eta_mw = ho_eta_mw_low_t(omega1, *rep.omega2_star, t_hot, r);
    }
    return rep;
}

MaxWork numeric_max_work(const std::function<double(double)>& f, double lo, double hi,
                         double rel_tol) {
    if (!(hi > lo)) throw std::invalid_argument("numeric_max_work: requires hi > lo");
    if (!(rel_tol > 0.0)) throw std::invalid_argument("numeric_max_work: rel_tol must be > 0");

    constexpr double inv_phi = 0.6180339887498949;  // (sqrt(5) - 1) / 2
    double a = lo, b = hi;
    double c = b - inv_phi * (b - a);
    double d = a + inv_phi * (b - a);
    double fc = f(c), fd = f(d);
    const double scale = std::max(std::abs(lo), std::abs(hi));
    for (int it = 0; it < 400 && (b - a) > rel_tol * scale; ++it) {
        if (fc > fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = f(d);
        }
    }
    MaxWork out;
    out.omega2_star = 0.5 * (a + b);
    out.w_star = f(out.omega2_star);
    const double edge = 16.0 * rel_tol * scale + 16.0 * (hi - lo) * 1e-15;
    out.interior = (out.omega2_star - lo > edge) && (hi - out.omega2_star > edge);
    return out;
}

MaxWork numeric_max_work_cycle(Medium medium, double omega1, const Reservoir& hot,
                               const Reservoir& cold, double omega2_lo, double omega2_hi,
                               double rel_tol) {
    if (!(omega2_lo >= omega1))
        throw std::invalid_argument("numeric_max_work_cycle: bracket must start at omega1");
    auto w_of = [&](double omega2) {
        CycleConfig cfg{medium, omega1, omega2, hot, cold};
        return run_cycle(cfg).perf.w_total;
    };
    return numeric_max_work(w_of, omega2_lo, omega2_hi, rel_tol);
}

}  // namespace qstirling::asym
