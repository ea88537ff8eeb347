#include "qstirling/presets.hpp"

#include <cmath>
#include <stdexcept>

namespace qstirling {

namespace {

const std::vector<double> k_preset_r_list = {0.0, 0.25, 0.5, 0.75, 1.0};

// Curves indexed by frequency ratio instead of r (figs 4 and 8).
SweepTable ratio_curves(Medium medium, bool axis_is_tc_over_th, double axis_min,
                        double axis_max, int steps, const std::vector<double>& ratios,
                        double t_hot, double r_fixed) {
    SweepTable table;
    table.columns = {axis_is_tc_over_th ? "tc_over_th" : "r",
                     "omega2_over_omega1",
                     "w_over_tc",
                     "eta",
                     "eta_carnot",
                     "eta_curzon_ahlborn",
                     "engine"};
    for (int i = 0; i < steps; ++i) {
        const double a = axis_min + (axis_max - axis_min) * i / (steps - 1);
        for (double ratio : ratios) {
            CycleConfig cfg;
            cfg.medium = medium;
            cfg.omega1 = 1.0;
            cfg.omega2 = ratio;
            cfg.cold = Reservoir::thermal(1.0);
            cfg.hot = axis_is_tc_over_th ? Reservoir::squeezed(1.0 / a, r_fixed)
                                         : Reservoir::squeezed(t_hot, a);
            const auto res = run_cycle(cfg);
            table.rows.push_back({a, ratio, res.perf.w_total,
                                  res.perf.eta ? *res.perf.eta : std::nan(""),
                                  res.perf.eta_carnot, res.perf.eta_curzon_ahlborn,
                                  res.perf.is_engine ? 1.0 : 0.0});
        }
    }
    return table;
}

}  // namespace

std::vector<std::string> figure_preset_names() {
    return {"fig1", "fig2", "fig3", "fig4", "fig5", "fig6", "fig7", "fig8", "fig9"};
}

PresetTable build_figure_preset(const std::string& name) {
    SweepSpec s;
    if (name == "fig1" || name == "fig6") {
        s.medium = name == "fig1" ? Medium::tls : Medium::ho;
        s.axis = SweepAxis::omega_ratio;
        s.axis_min = 1.0;
        s.axis_max = 10.0;
        s.steps = 19;
        s.t_hot = 2.0;
        s.r_values = k_preset_r_list;
        return {name, "W/T_c vs omega2/omega1 for r in {0,0.25,0.5,0.75,1}; T_h = 2 T_c",
                sweep(s)};
    }
    if (name == "fig2" || name == "fig7") {
        s.medium = name == "fig2" ? Medium::tls : Medium::ho;
        s.axis = SweepAxis::temp_ratio;
        s.axis_min = 1.1;
        s.axis_max = 4.0;
        s.steps = 30;
        s.omega2 = 5.0;
        s.r_values = k_preset_r_list;
        return {name, "W/T_c vs T_h/T_c for r in {0,0.25,0.5,0.75,1}; omega2 = 5 omega1",
                sweep(s)};
    }
    if (name == "fig3") {
        s.medium = Medium::tls;
        s.axis = SweepAxis::squeeze;
        s.axis_min = 0.0;
        s.axis_max = 1.5;
        s.steps = 31;
        s.omega2 = 5.0;
        s.t_hot = 1.2;
        return {name,
                "eta vs r at omega2 = 5 omega1; T_h = 1.2 T_c (the caption states no ratio)",
                sweep(s)};
    }
    if (name == "fig4") {
        return {name,
                "eta vs T_c/T_h for frequency ratios {2,5,8} at r = 0.5 (legend chosen here)",
                ratio_curves(Medium::tls, true, 0.26, 0.9, 25, {2.0, 5.0, 8.0}, 0.0, 0.5)};
    }
    if (name == "fig5") {
        s.medium = Medium::tls;
        s.axis = SweepAxis::surface;
        s.axis_min = 4.0;
        s.axis_max = 10.0;
        s.steps = 13;
        s.r_min = 0.0;
        s.r_max = 1.0;
        s.r_steps = 5;
        s.t_hot = 2.0;
        return {name,
                "eta surface over (omega2/omega1, r); T_h = 2 T_c; domain where the rise is "
                "monotone",
                sweep(s)};
    }
    if (name == "fig8") {
        return {name,
                "eta vs r for omega2/omega1 in {15,20,25}; omega1 = T_c, T_h = 2 T_c",
                ratio_curves(Medium::ho, false, 0.0, 1.5, 16, {15.0, 20.0, 25.0}, 2.0, 0.0)};
    }
    if (name == "fig9") {
        s.medium = Medium::ho;
        s.axis = SweepAxis::surface;
        s.axis_min = 12.0;
        s.axis_max = 25.0;
        s.steps = 14;
        s.r_min = 0.0;
        s.r_max = 1.5;
        s.r_steps = 7;
        s.t_hot = 2.0;
        return {name,
                "eta surface over (omega2/omega1, r); omega1 = T_c, T_h = 2 T_c; domain where "
                "the rise is monotone",
                sweep(s)};
    }
    throw std::invalid_argument("unknown figure preset: " + name);
}

}  // namespace qstirling
