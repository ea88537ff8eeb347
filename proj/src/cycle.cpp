#include "qstirling/cycle.hpp"

#include <cmath>
#include <stdexcept>

#include "qstirling/ho.hpp"
#include "qstirling/tls.hpp"

namespace qstirling {

std::string to_string(Medium m) { return m == Medium::tls ? "tls" : "ho"; }

Medium medium_from_string(const std::string& name) {
    if (name == "tls") return Medium::tls;
    if (name == "ho") return Medium::ho;
    throw std::invalid_argument("unknown medium: " + name + " (expected tls|ho)");
}

void CycleConfig::validate() const {
    hot.validate();
    cold.validate();
    if (!(omega1 > 0.0)) throw std::invalid_argument("CycleConfig: omega1 must be > 0");
    if (!(omega2 >= omega1))
        throw std::invalid_argument("CycleConfig: engine orientation requires omega2 >= omega1");
    if (!(hot.temperature > cold.temperature))
        throw std::invalid_argument("CycleConfig: requires hot.T > cold.T");
    if (!cold.is_thermal())
        throw std::invalid_argument("CycleConfig: cold bath must be thermal (r = 0)");
}

CycleResult run_cycle(const CycleConfig& config) {
    config.validate();

    StrokeLedger led;
    if (config.omega1 == config.omega2) {
        // Degenerate cycle: A = B and C = D, so the two isochoric legs would
        // only shuttle equal and opposite heat. Reported as an all-zero
        // ledger with no efficiency, which keeps sweeps continuous.
        CyclePerformance perf;
        perf.eta_carnot = 1.0 - config.cold.temperature / config.hot.temperature;
        perf.eta_curzon_ahlborn =
            1.0 - std::sqrt(config.cold.temperature / config.hot.temperature);
        return CycleResult{led, perf};
    }
    if (config.medium == Medium::tls) {
        led.q_ab = tls::heat_isothermal_hot(config.omega1, config.omega2, config.hot);
        led.w_ab = tls::work_isothermal_hot(config.omega1, config.omega2, config.hot);
        led.q_bc = tls::heat_isochoric(config.omega1, config.hot, config.cold,
                                       tls::IsochoricStroke::bc);
        led.q_cd = tls::heat_isothermal_cold(config.omega1, config.omega2, config.cold);
        led.w_cd = tls::work_isothermal_cold(config.omega1, config.omega2, config.cold);
        led.q_da = tls::heat_isochoric(config.omega2, config.hot, config.cold,
                                       tls::IsochoricStroke::da);
    } else {
        led.q_ab = ho::heat_isothermal_hot(config.omega1, config.omega2, config.hot);
        led.w_ab = ho::work_isothermal_hot(config.omega1, config.omega2, config.hot);
        led.q_bc = ho::heat_isochoric(config.omega1, config.hot, config.cold,
                                      ho::IsochoricStroke::bc);
        led.q_cd = ho::heat_isothermal_cold(config.omega1, config.omega2, config.cold);
        led.w_cd = ho::work_isothermal_cold(config.omega1, config.omega2, config.cold);
        led.q_da = ho::heat_isochoric(config.omega2, config.hot, config.cold,
                                      ho::IsochoricStroke::da);
    }

    CyclePerformance perf;
    perf.w_total = led.work_total();
    perf.q_hot = led.q_ab + led.q_da;
    perf.eta_carnot = 1.0 - config.cold.temperature / config.hot.temperature;
    perf.eta_curzon_ahlborn =
        1.0 - std::sqrt(config.cold.temperature / config.hot.temperature);
    perf.is_engine = perf.q_hot > 0.0;
    if (perf.is_engine) perf.eta = perf.w_total / perf.q_hot;
    return CycleResult{led, perf};
}

SweepAxis sweep_axis_from_string(const std::string& name) {
    if (name == "omega_ratio") return SweepAxis::omega_ratio;
    if (name == "temp_ratio") return SweepAxis::temp_ratio;
    if (name == "squeeze") return SweepAxis::squeeze;
    if (name == "surface") return SweepAxis::surface;
    throw std::invalid_argument("unknown sweep axis: " + name);
}

std::string to_string(SweepAxis axis) {
    switch (axis) {
        case SweepAxis::omega_ratio: return "omega_ratio";
        case SweepAxis::temp_ratio: return "temp_ratio";
        case SweepAxis::squeeze: return "squeeze";
        case SweepAxis::surface: return "surface";
    }
    return "?";
}

namespace {

std::vector<double> linspace(double lo, double hi, int steps) {
    if (steps < 2) throw std::invalid_argument("sweep: steps must be >= 2");
    if (!(hi >= lo)) throw std::invalid_argument("sweep: empty range");
    std::vector<double> v(static_cast<size_t>(steps));
    for (int i = 0; i < steps; ++i)
        v[static_cast<size_t>(i)] = lo + (hi - lo) * i / (steps - 1);
    return v;
}

std::vector<double> perf_columns(const CycleResult& res, double t_cold) {
    const auto& p = res.perf;
    return {p.w_total / t_cold,
            p.eta ? *p.eta : std::nan(""),
            p.eta_carnot,
            p.eta_curzon_ahlborn,
            p.is_engine ? 1.0 : 0.0};
}

}  // namespace

SweepTable sweep(const SweepSpec& spec) {
    SweepTable table;
    const std::vector<std::string> perf_names = {"w_over_tc", "eta", "eta_carnot",
                                                 "eta_curzon_ahlborn", "engine"};

    auto run = [&spec](double omega2, double t_hot, double r) {
        CycleConfig cfg;
        cfg.medium = spec.medium;
        cfg.omega1 = spec.omega1;
        cfg.omega2 = omega2;
        cfg.hot = Reservoir::squeezed(t_hot, r);
        cfg.cold = Reservoir::thermal(spec.t_cold);
        return run_cycle(cfg);
    };

    switch (spec.axis) {
        case SweepAxis::omega_ratio: {
            table.columns = {"omega2_over_omega1", "r"};
            table.columns.insert(table.columns.end(), perf_names.begin(), perf_names.end());
            for (double ratio : linspace(spec.axis_min, spec.axis_max, spec.steps)) {
                for (double r : spec.r_values) {
                    auto res = run(spec.omega1 * ratio, spec.t_hot, r);
                    std::vector<double> row = {ratio, r};
                    auto perf = perf_columns(res, spec.t_cold);
                    row.insert(row.end(), perf.begin(), perf.end());
                    table.rows.push_back(std::move(row));
                }
            }
            break;
        }
        case SweepAxis::temp_ratio: {
            table.columns = {"th_over_tc", "r"};
            table.columns.insert(table.columns.end(), perf_names.begin(), perf_names.end());
            for (double ratio : linspace(spec.axis_min, spec.axis_max, spec.steps)) {
                for (double r : spec.r_values) {
                    auto res = run(spec.omega2, spec.t_cold * ratio, r);
                    std::vector<double> row = {ratio, r};
                    auto perf = perf_columns(res, spec.t_cold);
                    row.insert(row.end(), perf.begin(), perf.end());
                    table.rows.push_back(std::move(row));
                }
            }
            break;
        }
        case SweepAxis::squeeze: {
            table.columns = {"r"};
            table.columns.insert(table.columns.end(), perf_names.begin(), perf_names.end());
            for (double r : linspace(spec.axis_min, spec.axis_max, spec.steps)) {
                auto res = run(spec.omega2, spec.t_hot, r);
                std::vector<double> row = {r};
                auto perf = perf_columns(res, spec.t_cold);
                row.insert(row.end(), perf.begin(), perf.end());
                table.rows.push_back(std::move(row));
            }
            break;
        }
        case SweepAxis::surface: {
            table.columns = {"omega2_over_omega1", "r"};
            table.columns.insert(table.columns.end(), perf_names.begin(), perf_names.end());
            for (double ratio : linspace(spec.axis_min, spec.axis_max, spec.steps)) {
                for (double r : linspace(spec.r_min, spec.r_max, spec.r_steps)) {
                    auto res = run(spec.omega1 * ratio, spec.t_hot, r);
                    std::vector<double> row = {ratio, r};
                    auto perf = perf_columns(res, spec.t_cold);
                    row.insert(row.end(), perf.begin(), perf.end());
                    table.rows.push_back(std::move(row));
                }
            }
            break;
        }
    }
    return table;
}

}  // namespace qstirling
