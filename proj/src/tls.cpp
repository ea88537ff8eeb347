#include "qstirling/tls.hpp"

#include <cmath>

#include "qstirling/stable_math.hpp"

namespace qstirling::tls {

namespace {

void require_frequencies(double omega1, double omega2) {
    if (!(omega1 > 0.0) || !(omega2 > 0.0))
        throw std::domain_error("tls: frequencies must be > 0");
}

// 1 - S_r and 1 + S_r without cancellation at small r:
//   1 - sech(2r) = 2 sinh^2(r) / cosh(2r),  1 + sech(2r) = 2 cosh^2(r) / cosh(2r).
struct SechSplit {
    double s;           // sech(2r)
    double one_minus_s;
    double one_plus_s;
};

SechSplit sech_split(double r) {
    const double c2r = std::cosh(2.0 * r);
    const double sh = std::sinh(r);
    const double ch = std::cosh(r);
    return SechSplit{1.0 / c2r, 2.0 * sh * sh / c2r, 2.0 * ch * ch / c2r};
}

// log of the F/G argument:
//   log[(1+S+e^{-u}(1-S)) / (1+S+e^{u}(1-S))],  u = omega/T.
// Both branches stay finite for u up to DBL_MAX scales.
double log_fg_ratio(double u, const SechSplit& s) {
    if (s.one_minus_s == 0.0) return 0.0;
    if (u < 500.0) {
        const double num = (s.one_minus_s) * std::expm1(-u) / 2.0;
        const double den = (s.one_minus_s) * std::expm1(u) / 2.0;
        return std::log1p(num) - std::log1p(den);
    }
    // e^{u} dominates the denominator
    const double log_num = std::log(s.one_plus_s + s.one_minus_s * std::exp(-u));
    const double log_den = u + std::log(s.one_minus_s) +
                           std::log1p(s.one_plus_s * std::exp(-u) / s.one_minus_s);
    return log_num - log_den;
}

// log(1 + (1 - S^2) sinh^2 x), the bracket inside the hot isothermal heat.
double log_sinh_bracket(double x, const SechSplit& s) {
    if (s.one_minus_s == 0.0) return 0.0;
    const double one_minus_s2 = s.one_minus_s * s.one_plus_s;  // 1 - S^2
    if (x < 300.0) {
        const double sh = std::sinh(x);
        return std::log1p(one_minus_s2 * sh * sh);
    }
    // sinh^2 x = (e^{2x} - 2 + e^{-2x}) / 4
    const double k = one_minus_s2 / 4.0;
    const double e2 = std::exp(-2.0 * x);
    return std::log(k) + 2.0 * x + std::log1p(((1.0 - 2.0 * k) * e2 + e2 * e2) / k);
}

}  // namespace

Populations steady_state(double omega, const Reservoir& res) {
    const Occupancy occ = squeezed_occupancy(omega, res);
    const double denom = 2.0 * occ.big_n + 1.0;
    return Populations{occ.big_n / denom, (occ.big_n + 1.0) / denom};
}

double internal_energy(double omega, const Reservoir& res) {
    res.validate();
    if (!(omega > 0.0)) throw std::domain_error("tls::internal_energy: omega must be > 0");
    return -(omega / 2.0) * sech(2.0 * res.squeeze_r) *
           std::tanh(omega / (2.0 * res.temperature));
}

double entropy(double omega, const Reservoir& res) {
    const Populations p = steady_state(omega, res);
    return binary_entropy(p.excited);
}

double coefficient_f(double omega, double temperature, double r) {
    if (!(omega > 0.0) || !(temperature > 0.0))
        throw std::domain_error("tls::coefficient_f: omega and T must be > 0");
    if (r == 0.0) return 1.0;
    const SechSplit s = sech_split(r);
    const double u = omega / temperature;
    return s.s * (1.0 + log_fg_ratio(u, s) / u);
}

double coefficient_g(double omega, double temperature, double r) {
    if (!(omega > 0.0) || !(temperature > 0.0))
        throw std::domain_error("tls::coefficient_g: omega and T must be > 0");
    if (r == 0.0) return 0.0;
    const SechSplit s = sech_split(r);
    const double u = omega / temperature;
    return s.s * log_fg_ratio(u, s) / u;
}

double heat_isothermal_hot(double omega1, double omega2, const Reservoir& hot) {
    require_frequencies(omega1, omega2);
    hot.validate();
    if (omega1 == omega2) return 0.0;
    const double th = hot.temperature;
    const double r = hot.squeeze_r;
    const SechSplit s = sech_split(r);
    const double x1 = omega1 / (2.0 * th);
    const double x2 = omega2 / (2.0 * th);

    const double cosh_term = th * (log_cosh(x1) - log_cosh(x2));
    const double f_term = coefficient_f(omega2, th, r) * (omega2 / 2.0) * std::tanh(x2) -
                          coefficient_f(omega1, th, r) * (omega1 / 2.0) * std::tanh(x1);
    const double bracket_term = (th / 2.0) * (log_sinh_bracket(x2, s) - log_sinh_bracket(x1, s));
    return cosh_term + f_term + bracket_term;
}

double heat_isothermal_hot_thermal(double omega1, double omega2, double t_hot) {
    require_frequencies(omega1, omega2);
    if (!(t_hot > 0.0)) throw std::domain_error("tls: temperature must be > 0");
    const double x1 = omega1 / (2.0 * t_hot);
    const double x2 = omega2 / (2.0 * t_hot);
    return t_hot * (log_cosh(x1) - log_cosh(x2)) + (omega2 / 2.0) * std::tanh(x2) -
           (omega1 / 2.0) * std::tanh(x1);
}

double work_isothermal_hot(double omega1, double omega2, const Reservoir& hot) {
    require_frequencies(omega1, omega2);
    hot.validate();
    if (omega1 == omega2) return 0.0;
    const double th = hot.temperature;
    const double r = hot.squeeze_r;
    const SechSplit s = sech_split(r);
    const double x1 = omega1 / (2.0 * th);
    const double x2 = omega2 / (2.0 * th);

    // The G terms need their (omega/2) weights for the first law to hold;
    // with them this expression equals Q_AB - Delta U_AB exactly.
    const double cosh_term = th * (log_cosh(x1) - log_cosh(x2));
    const double bracket_term = (th / 2.0) * (log_sinh_bracket(x2, s) - log_sinh_bracket(x1, s));
    const double g_term = (omega2 / 2.0) * coefficient_g(omega2, th, r) * std::tanh(x2) -
                          (omega1 / 2.0) * coefficient_g(omega1, th, r) * std::tanh(x1);
    return cosh_term + bracket_term + g_term;
}

double heat_isothermal_cold(double omega1, double omega2, const Reservoir& cold) {
    require_frequencies(omega1, omega2);
    cold.validate();
    if (!cold.is_thermal())
        throw std::domain_error("tls::heat_isothermal_cold: cold bath must be thermal (r = 0)");
    if (omega1 == omega2) return 0.0;
    const double tc = cold.temperature;
    const double x1 = omega1 / (2.0 * tc);
    const double x2 = omega2 / (2.0 * tc);
    return tc * (log_cosh(x2) - log_cosh(x1)) + (omega1 / 2.0) * std::tanh(x1) -
           (omega2 / 2.0) * std::tanh(x2);
}

double work_isothermal_cold(double omega1, double omega2, const Reservoir& cold) {
    require_frequencies(omega1, omega2);
    cold.validate();
    if (!cold.is_thermal())
        throw std::domain_error("tls::work_isothermal_cold: cold bath must be thermal (r = 0)");
    if (omega1 == omega2) return 0.0;
    const double tc = cold.temperature;
    return tc * (log_cosh(omega2 / (2.0 * tc)) - log_cosh(omega1 / (2.0 * tc)));
}

double heat_isochoric(double omega, const Reservoir& hot, const Reservoir& cold,
                      IsochoricStroke stroke) {
    if (!(omega > 0.0)) throw std::domain_error("tls::heat_isochoric: omega must be > 0");
    hot.validate();
    cold.validate();
    const double hot_side = sech(2.0 * hot.squeeze_r) * std::tanh(omega / (2.0 * hot.temperature));
    const double cold_side = std::tanh(omega / (2.0 * cold.temperature));
    const double half = omega / 2.0;
    return stroke == IsochoricStroke::bc ? half * (hot_side - cold_side)
                                         : half * (cold_side - hot_side);
}

double effective_temperature(double omega, double temperature, double r) {
    if (!(omega > 0.0) || !(temperature > 0.0))
        throw std::domain_error("tls::effective_temperature: omega and T must be > 0");
    if (r < 0.0) throw std::domain_error("tls::effective_temperature: r must be >= 0");
    if (r == 0.0) return temperature;
    // T_eff = omega / (2 artanh[tanh(x) / cosh(2r)]), x = omega/2T, evaluated as
    // omega / log(A/B) with A = cosh(2r) + tanh x and B = cosh(2r) - tanh x
    // expanded so neither side cancels for large x.
    const double x = omega / (2.0 * temperature);
    const double c2r = std::cosh(2.0 * r);
    const double tanh_x = std::tanh(x);
    const double a = c2r + tanh_x;
    const double one_minus_tanh = 2.0 / (std::expm1(2.0 * x) + 2.0);
    const double b = 2.0 * std::sinh(r) * std::sinh(r) + one_minus_tanh;
    return omega / std::log(a / b);
}

}  // namespace qstirling::tls
