#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "qstirling/asymptotics.hpp"
#include "qstirling/cycle.hpp"
#include "qstirling/ho.hpp"
#include "qstirling/presets.hpp"
#include "qstirling/tls.hpp"
#include "qstirling/verify.hpp"

namespace {

using nlohmann::json;
using namespace qstirling;

std::string fmt12(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

void write_csv(const SweepTable& table, std::ostream& os) {
    for (size_t i = 0; i < table.columns.size(); ++i)
        os << table.columns[i] << (i + 1 < table.columns.size() ? "," : "\n");
    for (const auto& row : table.rows) {
        for (size_t i = 0; i < row.size(); ++i)
            os << fmt12(row[i]) << (i + 1 < row.size() ? "," : "\n");
    }
}

json table_json(const SweepTable& table, json meta) {
    json rows = json::array();
    for (const auto& row : table.rows) {
        json r = json::array();
        for (double v : row) {
            if (std::isnan(v))
                r.push_back(nullptr);
            else
                r.push_back(v);
        }
        rows.push_back(std::move(r));
    }
    return json{{"meta", std::move(meta)}, {"columns", table.columns}, {"rows", std::move(rows)}};
}

int emit(const SweepTable& table, const json& meta, const std::string& format,
         const std::string& output) {
    std::ostringstream body;
    if (format == "csv")
        write_csv(table, body);
    else
        body << table_json(table, meta).dump(2) << "\n";
    if (output.empty() || output == "-") {
        std::cout << body.str();
        return 0;
    }
    std::ofstream f(output, std::ios::binary);
    if (!f) {
        std::cerr << "error: cannot open output path: " << output << "\n";
        return 3;
    }
    f << body.str();
    return f.good() ? 0 : 3;
}

struct CycleFlags {
    std::string medium = "tls";
    double omega1 = 1.0;
    double omega2 = 5.0;
    double t_hot = 2.0;
    double t_cold = 1.0;
    double r = 0.0;
    double phi = 0.0;
};

CycleConfig to_config(const CycleFlags& f) {
    CycleConfig cfg;
    cfg.medium = medium_from_string(f.medium);
    cfg.omega1 = f.omega1;
    cfg.omega2 = f.omega2;
    cfg.hot = Reservoir::squeezed(f.t_hot, f.r, f.phi);
    cfg.cold = Reservoir::thermal(f.t_cold);
    return cfg;
}

int cmd_cycle(const CycleFlags& f, const std::string& format, const std::string& output) {
    const CycleConfig cfg = to_config(f);
    const CycleResult res = run_cycle(cfg);
    const bool degenerate = f.omega1 == f.omega2;
    const bool surpasses =
        res.perf.is_engine && *res.perf.eta > res.perf.eta_carnot + 1e-12;
    std::optional<double> t_eff;
    if (cfg.medium == Medium::tls)
        t_eff = tls::effective_temperature(f.omega2, f.t_hot, f.r);

    json out;
    out["meta"] = {{"command", "cycle"}, {"medium", f.medium}, {"omega1", f.omega1},
                   {"omega2", f.omega2}, {"th", f.t_hot},      {"tc", f.t_cold},
                   {"r", f.r},           {"phi", f.phi}};
    out["ledger"] = {{"q_ab", res.ledger.q_ab}, {"w_ab", res.ledger.w_ab},
                     {"q_bc", res.ledger.q_bc}, {"q_cd", res.ledger.q_cd},
                     {"w_cd", res.ledger.w_cd}, {"q_da", res.ledger.q_da}};
    out["w_total"] = res.perf.w_total;
    out["q_hot"] = res.perf.q_hot;
    out["eta"] = res.perf.eta ? json(*res.perf.eta) : json(nullptr);
    out["eta_carnot"] = res.perf.eta_carnot;
    out["eta_curzon_ahlborn"] = res.perf.eta_curzon_ahlborn;
    out["regime"] = res.perf.is_engine ? "engine" : "not-an-engine";
    if (t_eff) out["t_eff"] = *t_eff;
    if (degenerate) out["note"] = "degenerate cycle (omega1 == omega2): all strokes are zero";
    else if (surpasses) out["note"] = "surpasses Carnot";

    std::ostringstream body;
    if (format == "json") {
        body << out.dump(2) << "\n";
    } else {
        body << "quantum Stirling cycle (" << f.medium << ")\n"
             << "  omega1 = " << fmt12(f.omega1) << "  omega2 = " << fmt12(f.omega2)
             << "  T_h = " << fmt12(f.t_hot) << "  T_c = " << fmt12(f.t_cold)
             << "  r = " << fmt12(f.r) << "  phi = " << fmt12(f.phi) << "\n"
             << "  Q_AB = " << fmt12(res.ledger.q_ab) << "   W_AB = " << fmt12(res.ledger.w_ab)
             << "\n"
             << "  Q_BC = " << fmt12(res.ledger.q_bc) << "\n"
             << "  Q_CD = " << fmt12(res.ledger.q_cd) << "   W_CD = " << fmt12(res.ledger.w_cd)
             << "\n"
             << "  Q_DA = " << fmt12(res.ledger.q_da) << "\n"
             << "  W_total = " << fmt12(res.perf.w_total)
             << "   Q_H = " << fmt12(res.perf.q_hot) << "\n"
             << "  eta = " << (res.perf.eta ? fmt12(*res.perf.eta) : std::string("undefined"))
             << "   eta_C = " << fmt12(res.perf.eta_carnot)
             << "   eta_CA = " << fmt12(res.perf.eta_curzon_ahlborn) << "\n"
             << "  regime: " << (res.perf.is_engine ? "engine" : "not-an-engine") << "\n";
        if (t_eff) body << "  T_eff(omega2) = " << fmt12(*t_eff) << "\n";
        if (degenerate) body << "  note: degenerate cycle (omega1 == omega2)\n";
        else if (surpasses) body << "  note: surpasses Carnot\n";
    }
    if (output.empty() || output == "-") {
        std::cout << body.str();
        return 0;
    }
    std::ofstream fo(output, std::ios::binary);
    if (!fo) {
        std::cerr << "error: cannot open output path: " << output << "\n";
        return 3;
    }
    fo << body.str();
    return 0;
}

json preset_meta(const PresetTable& p, const char* command) {
    return json{{"command", command}, {"preset", p.name}, {"note", p.note}};
}

int cmd_limits(const std::string& medium_name, const std::string& regime, double r,
               const std::string& format, const std::string& output) {
    const Medium medium = medium_from_string(medium_name);
    SweepTable table;
    table.columns = {"regime_param", "w_exact", "w_approx", "rel_error", "eta_exact_at_max",
                     "eta_mw_analytic"};
    json meta = {{"command", "limits"}, {"medium", medium_name}, {"regime", regime}, {"r", r}};

    if (regime == "low") {
        // omega/T_c from 5 to 80; omega1 = 1, omega2 = 3. The low-T regime is
        // doubly asymptotic, so T_h deepens with the sequence (T_h = k/2).
        const double w1 = 1.0, w2 = 3.0;
        meta["params"] = {{"omega1", w1}, {"omega2", w2}, {"th", "k/2"}};
        for (double k : {5.0, 10.0, 20.0, 40.0, 80.0}) {
            const double tc = w1 / k;
            const double th = k / 2.0;
            const Reservoir hot = Reservoir::squeezed(th, r);
            const Reservoir cold = Reservoir::thermal(tc);
            const CycleConfig cfg{medium, w1, w2, hot, cold};
            const double w_exact = run_cycle(cfg).perf.w_total;
            const auto rep = medium == Medium::tls
                                 ? asym::tls_regime_report(asym::Regime::low_t, w1, w2, th,
                                                           tc, r)
                                 : asym::ho_regime_report(asym::Regime::low_t, w1, w2, th,
                                                          tc, r);
            const auto mx = asym::numeric_max_work_cycle(medium, w1, hot, cold, w1, 50.0 * th);
            const CycleConfig at_max{medium, w1, mx.omega2_star, hot, cold};
            const auto perf_max = run_cycle(at_max).perf;
            table.rows.push_back({k, w_exact, rep.w_approx,
                                  std::abs(w_exact - rep.w_approx) / std::abs(w_exact),
                                  perf_max.eta ? *perf_max.eta : std::nan(""), rep.eta_mw});
        }
    } else if (regime == "high") {
        // omega2/T_h from 0.5 down to 0.01; omega1 = omega2/5, T_c = T_h/2.
        const double w2 = 1.0, w1 = 0.2;
        meta["params"] = {{"omega1", w1}, {"omega2", w2}, {"tc_over_th", 0.5}};
        for (double k : {0.5, 0.2, 0.1, 0.05, 0.01}) {
            const double th = w2 / k;
            const double tc = th / 2.0;
            const Reservoir hot = Reservoir::squeezed(th, r);
            const Reservoir cold = Reservoir::thermal(tc);
            const CycleConfig cfg{medium, w1, w2, hot, cold};
            const double w_exact = run_cycle(cfg).perf.w_total;
            const auto rep = medium == Medium::tls
                                 ? asym::tls_regime_report(asym::Regime::high_t, w1, w2, th,
                                                           tc, r)
                                 : asym::ho_regime_report(asym::Regime::high_t, w1, w2, th,
                                                          tc, r);
            const auto mx = asym::numeric_max_work_cycle(medium, w1, hot, cold, w1, 20.0 * th);
            const CycleConfig at_max{medium, w1, mx.omega2_star, hot, cold};
            const auto perf_max = run_cycle(at_max).perf;
            table.rows.push_back({k, w_exact, rep.w_approx,
                                  std::abs(w_exact - rep.w_approx) / std::abs(w_exact),
                                  perf_max.eta ? *perf_max.eta : std::nan(""), rep.eta_mw});
        }
    } else {
        std::cerr << "error: --regime must be high or low\n";
        return 2;
    }
    return emit(table, meta, format, output);
}

int cmd_optimize(const CycleFlags& f, double lo, double hi, const std::string& format,
                 const std::string& output) {
    const Medium medium = medium_from_string(f.medium);
    const Reservoir hot = Reservoir::squeezed(f.t_hot, f.r, f.phi);
    const Reservoir cold = Reservoir::thermal(f.t_cold);
    const auto mx = asym::numeric_max_work_cycle(medium, f.omega1, hot, cold, lo, hi);
    json out = {{"meta",
                 {{"command", "optimize"}, {"medium", f.medium}, {"omega1", f.omega1},
                  {"th", f.t_hot}, {"tc", f.t_cold}, {"r", f.r}, {"lo", lo}, {"hi", hi}}},
                {"omega2_star", mx.omega2_star},
                {"w_star", mx.w_star},
                {"interior", mx.interior}};
    std::ostringstream body;
    if (format == "json") {
        body << out.dump(2) << "\n";
    } else {
        body << "omega2_star = " << fmt12(mx.omega2_star) << "\n"
             << "w_star = " << fmt12(mx.w_star) << "\n"
             << (mx.interior ? "interior maximum\n"
                             : "maximum on bracket edge (no interior maximum detected)\n");
    }
    if (output.empty() || output == "-") {
        std::cout << body.str();
    } else {
        std::ofstream fo(output, std::ios::binary);
        if (!fo) return 3;
        fo << body.str();
    }
    return 0;
}

int cmd_verify(double tolerance_scale) {
    const auto results = verify::run_all_checks(tolerance_scale);
    size_t width = 0;
    for (const auto& r : results) width = std::max(width, r.name.size());
    int failures = 0;
    for (const auto& r : results) {
        std::cout << (r.pass ? "[PASS] " : "[FAIL] ") << r.name
                  << std::string(width + 2 - r.name.size(), ' ') << "measured "
                  << fmt12(r.measured) << "  threshold " << fmt12(r.threshold);
        if (!r.detail.empty()) std::cout << "  (" << r.detail << ")";
        std::cout << "\n";
        if (!r.pass) ++failures;
    }
    std::cout << (failures == 0 ? "all checks passed\n"
                                : std::to_string(failures) + " check(s) failed\n");
    return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"quantum Stirling engine with a squeezed hot reservoir"};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_config("--config")->configurable(false);

    std::string format = "csv";
    std::string output;
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    app.add_option("--output,-o", output, "output path (default stdout)");

    CycleFlags cf;
    auto add_cycle_flags = [&cf](CLI::App* sub, bool with_omega2) {
        sub->add_option("--medium", cf.medium, "working medium")
            ->check(CLI::IsMember({"tls", "ho"}))
            ->capture_default_str();
        sub->add_option("--omega1", cf.omega1, "lower frequency")->capture_default_str();
        if (with_omega2)
            sub->add_option("--omega2", cf.omega2, "upper frequency")->capture_default_str();
        sub->add_option("--th", cf.t_hot, "hot temperature")->capture_default_str();
        sub->add_option("--tc", cf.t_cold, "cold temperature")->capture_default_str();
        sub->add_option("--r", cf.r, "hot-bath squeezing parameter")->capture_default_str();
        sub->add_option("--phi", cf.phi, "hot-bath squeeze phase")->capture_default_str();
    };

    auto* c_cycle = app.add_subcommand("cycle", "single-cycle stroke ledger and performance");
    add_cycle_flags(c_cycle, true);

    auto* c_sweep = app.add_subcommand("sweep", "parameter sweep (or a figure preset)");
    add_cycle_flags(c_sweep, true);
    std::string axis = "omega_ratio";
    std::string preset;
    double axis_min = 1.0, axis_max = 10.0;
    int steps = 19;
    std::vector<double> r_values;
    c_sweep->add_option("--axis", axis, "sweep axis")
        ->check(CLI::IsMember({"omega_ratio", "temp_ratio", "squeeze"}))
        ->capture_default_str();
    c_sweep->add_option("--min", axis_min, "axis lower bound")->capture_default_str();
    c_sweep->add_option("--max", axis_max, "axis upper bound")->capture_default_str();
    c_sweep->add_option("--steps", steps, "number of axis points")->capture_default_str();
    c_sweep->add_option("--r-values", r_values, "per-curve squeezing values");
    c_sweep->add_option("--preset", preset, "figure preset fig1..fig9");

    auto* c_surface = app.add_subcommand("surface", "2D grid over (omega2/omega1, r)");
    add_cycle_flags(c_surface, false);
    double s_rmin = 0.0, s_rmax = 1.0;
    int s_rsteps = 5;
    double s_min = 1.0, s_max = 10.0;
    int s_steps = 10;
    std::string s_preset;
    c_surface->add_option("--min", s_min, "omega2/omega1 lower bound")->capture_default_str();
    c_surface->add_option("--max", s_max, "omega2/omega1 upper bound")->capture_default_str();
    c_surface->add_option("--steps", s_steps, "ratio points")->capture_default_str();
    c_surface->add_option("--rmin", s_rmin, "r lower bound")->capture_default_str();
    c_surface->add_option("--rmax", s_rmax, "r upper bound")->capture_default_str();
    c_surface->add_option("--rsteps", s_rsteps, "r points")->capture_default_str();
    c_surface->add_option("--preset", s_preset, "figure preset fig5 or fig9");

    auto* c_limits = app.add_subcommand("limits", "exact vs asymptotic work comparison");
    std::string l_medium = "tls", l_regime = "low";
    double l_r = 0.5;
    c_limits->add_option("--medium", l_medium)->check(CLI::IsMember({"tls", "ho"}));
    c_limits->add_option("--regime", l_regime)->check(CLI::IsMember({"high", "low"}));
    c_limits->add_option("--r", l_r, "squeezing parameter")->capture_default_str();

    auto* c_optimize = app.add_subcommand("optimize", "maximise total work over omega2");
    add_cycle_flags(c_optimize, false);
    double o_lo = 1.0, o_hi = 50.0;
    c_optimize->add_option("--lo", o_lo, "omega2 bracket lower edge")->capture_default_str();
    c_optimize->add_option("--hi", o_hi, "omega2 bracket upper edge")->capture_default_str();

    auto* c_verify = app.add_subcommand("verify", "oracle-vs-closed-form check matrix");
    double tolerance_scale = 1.0;
    c_verify->add_option("--tolerance-scale", tolerance_scale, "multiplies every threshold")
        ->capture_default_str();

    CLI11_PARSE(app, argc, argv);

    try {
        if (c_cycle->parsed()) return cmd_cycle(cf, format, output);
        if (c_sweep->parsed()) {
            if (!preset.empty()) {
                const PresetTable p = build_figure_preset(preset);
                return emit(p.table, preset_meta(p, "sweep"), format, output);
            }
            SweepSpec spec;
            spec.medium = medium_from_string(cf.medium);
            spec.axis = sweep_axis_from_string(axis);
            spec.omega1 = cf.omega1;
            spec.omega2 = cf.omega2;
            spec.t_hot = cf.t_hot;
            spec.t_cold = cf.t_cold;
            spec.axis_min = axis_min;
            spec.axis_max = axis_max;
            spec.steps = steps;
            if (!r_values.empty()) spec.r_values = r_values;
            else if (spec.axis != SweepAxis::squeeze) spec.r_values = {cf.r};
            json meta = {{"command", "sweep"},   {"medium", cf.medium}, {"axis", axis},
                         {"omega1", cf.omega1},  {"omega2", cf.omega2}, {"th", cf.t_hot},
                         {"tc", cf.t_cold},      {"min", axis_min},     {"max", axis_max},
                         {"steps", steps},       {"r_values", spec.r_values}};
            return emit(sweep(spec), meta, format, output);
        }
        if (c_surface->parsed()) {
            if (!s_preset.empty()) {
                if (s_preset != "fig5" && s_preset != "fig9")
                    throw CLI::ValidationError("--preset", "surface presets are fig5 and fig9");
                const PresetTable p = build_figure_preset(s_preset);
                return emit(p.table, preset_meta(p, "surface"), format, output);
            }
            SweepSpec spec;
            spec.medium = medium_from_string(cf.medium);
            spec.axis = SweepAxis::surface;
            spec.omega1 = cf.omega1;
            spec.t_hot = cf.t_hot;
            spec.t_cold = cf.t_cold;
            spec.axis_min = s_min;
            spec.axis_max = s_max;
            spec.steps = s_steps;
            spec.r_min = s_rmin;
            spec.r_max = s_rmax;
            spec.r_steps = s_rsteps;
            json meta = {{"command", "surface"}, {"medium", cf.medium}, {"omega1", cf.omega1},
                         {"th", cf.t_hot},       {"tc", cf.t_cold},     {"min", s_min},
                         {"max", s_max},         {"steps", s_steps},    {"rmin", s_rmin},
                         {"rmax", s_rmax},       {"rsteps", s_rsteps}};
            return emit(sweep(spec), meta, format, output);
        }
        if (c_limits->parsed()) return cmd_limits(l_medium, l_regime, l_r, format, output);
        if (c_optimize->parsed()) return cmd_optimize(cf, o_lo, o_hi, format, output);
        if (c_verify->parsed()) return cmd_verify(tolerance_scale);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
