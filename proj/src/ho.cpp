#include "qstirling/ho.hpp"

#include <cmath>

#include "qstirling/stable_math.hpp"

namespace qstirling::ho {

namespace {

void require_frequencies(double omega1, double omega2) {
    if (!(omega1 > 0.0) || !(omega2 > 0.0))
        throw std::domain_error("ho: frequencies must be > 0");
}

void require_thermal_cold(const Reservoir& cold, const char* who) {
    cold.validate();
    if (!cold.is_thermal())
        throw std::domain_error(std::string(who) + ": cold bath must be thermal (r = 0)");
}

}  // namespace

double internal_energy(double omega, const Reservoir& res) {
    res.validate();
    if (!(omega > 0.0)) throw std::domain_error("ho::internal_energy: omega must be > 0");
    return (omega / 2.0) * std::cosh(2.0 * res.squeeze_r) *
           coth(omega / (2.0 * res.temperature));
}

double coefficient_f(double omega, double temperature, double r) {
    if (!(omega > 0.0) || !(temperature > 0.0))
        throw std::domain_error("ho::coefficient_f: omega and T must be > 0");
    if (r < 0.0) throw std::domain_error("ho::coefficient_f: r must be >= 0");
    return 0.5 * (1.0 + std::cosh(2.0 * r) * coth(omega / (2.0 * temperature)));
}

double heat_isothermal_hot(double omega1, double omega2, const Reservoir& hot) {
    require_frequencies(omega1, omega2);
    hot.validate();
    if (omega1 == omega2) return 0.0;
    // The bracketed summand F log F - (F-1) log(F-1) is the bosonic entropy
    // g(F-1) with F - 1 = N; N is computed through the occupancy form, which
    // does not cancel at low temperature.
    const double n1 = squeezed_occupancy(omega1, hot).big_n;
    const double n2 = squeezed_occupancy(omega2, hot).big_n;
    return hot.temperature * (bosonic_entropy(n1) - bosonic_entropy(n2));
}

double work_isothermal_hot(double omega1, double omega2, const Reservoir& hot) {
    if (omega1 == omega2) return 0.0;
    return heat_isothermal_hot(omega1, omega2, hot) + internal_energy(omega2, hot) -
           internal_energy(omega1, hot);
}

double heat_isothermal_cold(double omega1, double omega2, const Reservoir& cold) {
    require_frequencies(omega1, omega2);
    require_thermal_cold(cold, "ho::heat_isothermal_cold");
    if (omega1 == omega2) return 0.0;
    const double tc = cold.temperature;
    const double x1 = omega1 / (2.0 * tc);
    const double x2 = omega2 / (2.0 * tc);
    return tc * (log_sinh(x1) - log_sinh(x2)) + (omega2 / 2.0) * coth(x2) -
           (omega1 / 2.0) * coth(x1);
}

double work_isothermal_cold(double omega1, double omega2, const Reservoir& cold) {
    require_frequencies(omega1, omega2);
    require_thermal_cold(cold, "ho::work_isothermal_cold");
    if (omega1 == omega2) return 0.0;
    const double tc = cold.temperature;
    return tc * (log_sinh(omega1 / (2.0 * tc)) - log_sinh(omega2 / (2.0 * tc)));
}

double heat_isochoric(double omega, const Reservoir& hot, const Reservoir& cold,
                      IsochoricStroke stroke) {
    if (!(omega > 0.0)) throw std::domain_error("ho::heat_isochoric: omega must be > 0");
    hot.validate();
    cold.validate();
    const double hot_side =
        std::cosh(2.0 * hot.squeeze_r) * coth(omega / (2.0 * hot.temperature));
    const double cold_side = coth(omega / (2.0 * cold.temperature));
    const double half = omega / 2.0;
    return stroke == IsochoricStroke::bc ? half * (cold_side - hot_side)
                                         : half * (hot_side - cold_side);
}

double total_work(double omega1, double omega2, const Reservoir& hot, const Reservoir& cold) {
    // W_AB + W_CD; the first-law sum closes the cycle against the four
    // heats, which a direct combined formula would not.
    return work_isothermal_hot(omega1, omega2, hot) +
           work_isothermal_cold(omega1, omega2, cold);
}

}  // namespace qstirling::ho
