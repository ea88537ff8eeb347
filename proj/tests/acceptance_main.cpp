// Acceptance suite: ten numbered criteria, one pass/fail line each.
// Exit status is the number of failed criteria.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "qstirling/asymptotics.hpp"
#include "qstirling/cycle.hpp"
#include "qstirling/ho.hpp"
#include "qstirling/oracle.hpp"
#include "qstirling/presets.hpp"
#include "qstirling/stable_math.hpp"
#include "qstirling/tls.hpp"

using namespace qstirling;
namespace orc = qstirling::oracle;

namespace {

struct Criterion {
    int id;
    std::string title;
    bool pass = true;
    double seconds = 0.0;
    std::vector<std::string> notes;

    void fail(const std::string& why) {
        pass = false;
        notes.push_back(why);
    }
    void note(const std::string& what) { notes.push_back(what); }
};

std::vector<double> log_grid(double lo, double hi, int n) {
    std::vector<double> v(static_cast<size_t>(n));
    const double llo = std::log(lo), lhi = std::log(hi);
    for (int i = 0; i < n; ++i)
        v[static_cast<size_t>(i)] = std::exp(llo + (lhi - llo) * i / (n - 1));
    return v;
}

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

// 1. TLS closed forms vs matrix entropy/energy on a 40x20 grid, 1e-10 absolute.
void criterion_1(Criterion& c) {
    const orc::Tolerances tol;
    double worst = 0.0;
    for (double ratio : log_grid(1e-2, 20.0, 40)) {
        for (int j = 0; j < 20; ++j) {
            const double r = 2.0 * j / 19.0;
            const Reservoir res = Reservoir::squeezed(1.0, r);
            const auto rho = orc::tls_closed_form_state(ratio, res);
            worst = std::max(worst, std::abs(orc::von_neumann_entropy(rho) -
                                             tls::entropy(ratio, res)));
            worst = std::max(
                worst,
                std::abs(orc::energy_expectation(rho, orc::tls_hamiltonian_diag(ratio)) -
                         tls::internal_energy(ratio, res)));
        }
    }
    c.note("worst |closed form - matrix| = " + num(worst));
    if (worst > tol.tls_closed_form_abs) c.fail("exceeds 1e-10");
}

// 2. Integrated Lindblad fixed point vs closed-form populations, 12 triples.
void criterion_2(Criterion& c) {
    double worst = 0.0;
    int count = 0;
    for (double phi : {0.0, M_PI_2, M_PI}) {
        for (double gamma : {0.1, 1.0, 10.0}) {
            const double omega = 0.7 + 0.1 * count;
            const double temp = 1.0 + 0.05 * count;
            const double r = 0.3 + 0.1 * count;
            orc::LindbladParams p{gamma, Reservoir::squeezed(temp, r, phi), omega};
            const auto rho = orc::lindblad_steady_state_tls(p);
            worst = std::max(worst, orc::trace_distance(
                                        rho, orc::tls_closed_form_state(omega, p.reservoir)));
            ++count;
        }
    }
    for (double r : {0.0, 1.2, 2.0}) {
        orc::LindbladParams p{1.0, Reservoir::squeezed(1.0, r, 0.9), 1.0};
        const auto rho = orc::lindblad_steady_state_tls(p);
        worst = std::max(
            worst, orc::trace_distance(rho, orc::tls_closed_form_state(1.0, p.reservoir)));
        ++count;
    }
    c.note(std::to_string(count) + " triples, worst trace distance = " + num(worst));
    if (worst > orc::Tolerances{}.lindblad_trace_distance) c.fail("exceeds 1e-8");
}

// 3. HO internal energy vs truncated-Fock trace at dynamic cutoff, 9 triples.
void criterion_3(Criterion& c) {
    const double triples[9][3] = {{1.0, 1.0, 0.5},  {0.5, 2.0, 0.8}, {2.0, 1.5, 0.3},
                                  {1.0, 3.0, 1.0},  {0.8, 0.6, 0.0}, {1.0, 8.0, 0.5},
                                  {3.0, 2.0, 1.2},  {0.3, 1.0, 0.6}, {1.0, 15.0, 0.0}};
    double worst = 0.0;
    for (const auto& t : triples) {
        const double omega = t[0], temp = t[1], r = t[2];
        const double load = thermal_occupation(omega, temp) * std::cosh(2.0 * r);
        if (load > 20.0) {
            c.fail("triple outside the n cosh(2r) <= 20 domain");
            return;
        }
        const int cutoff = orc::choose_cutoff(omega, temp, r);
        const auto st = orc::squeezed_thermal_state_ho(omega, temp, r, 0.0, cutoff);
        const double e_matrix =
            orc::energy_expectation(st.rho, orc::ho_hamiltonian_diag(omega, cutoff));
        const double e_closed = ho::internal_energy(omega, Reservoir::squeezed(temp, r));
        worst = std::max(worst, std::abs(e_matrix - e_closed) / std::abs(e_closed));
    }
    c.note("worst relative error = " + num(worst));
    if (worst > orc::Tolerances{}.ho_energy_rel) c.fail("exceeds 1e-8");
}

// 4. First law, cycle closure, and the two efficiency forms, 1e4
//    random admissible configs per medium.
void criterion_4(Criterion& c) {
    std::mt19937 rng(777u);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    double worst_closure = 0.0, worst_eta = 0.0;
    for (Medium medium : {Medium::tls, Medium::ho}) {
        for (int i = 0; i < 10000; ++i) {
            CycleConfig cfg;
            cfg.medium = medium;
            cfg.omega1 = 0.1 + 4.9 * u(rng);
            cfg.omega2 = cfg.omega1 * (1.0 + 9.0 * u(rng));
            const double tc = 0.2 + 1.8 * u(rng);
            cfg.cold = Reservoir::thermal(tc);
            cfg.hot = Reservoir::squeezed(tc * (1.05 + 3.95 * u(rng)), 1.5 * u(rng));
            const auto res = run_cycle(cfg);
            const double q = res.ledger.heat_total();
            const double w = res.ledger.work_total();
            worst_closure =
                std::max(worst_closure,
                         std::abs(q - w) / std::max({std::abs(q), std::abs(w), 1e-30}));
            if (res.perf.is_engine) {
                const double eta2 = 1.0 + (res.ledger.q_bc + res.ledger.q_cd) /
                                              (res.ledger.q_ab + res.ledger.q_da);
                worst_eta = std::max(worst_eta, std::abs(*res.perf.eta - eta2));
            }
        }
    }
    c.note("worst closure = " + num(worst_closure) + ", worst eta gap = " + num(worst_eta));
    if (worst_closure > 1e-10) c.fail("closure exceeds 1e-10 relative");
    if (worst_eta > 1e-10) c.fail("efficiency forms differ beyond 1e-10");
}

// 5. Thermal reduction at r = 0: independent hot-heat path to 1e-12, and
//    eta <= eta_C + 1e-12 on the grid.
void criterion_5(Criterion& c) {
    double worst_path = 0.0, worst_carnot = -1.0;
    for (double w1 : {0.3, 1.0, 2.0}) {
        for (double ratio : {1.5, 3.0, 5.0, 8.0}) {
            for (double th : {1.2, 2.0, 3.5}) {
                const double w2 = w1 * ratio;
                worst_path = std::max(
                    worst_path,
                    std::abs(tls::heat_isothermal_hot(w1, w2, Reservoir::thermal(th)) -
                             tls::heat_isothermal_hot_thermal(w1, w2, th)));
                for (Medium m : {Medium::tls, Medium::ho}) {
                    const CycleConfig cfg{m, w1, w2, Reservoir::thermal(th),
                                          Reservoir::thermal(1.0)};
                    const auto res = run_cycle(cfg);
                    if (res.perf.is_engine)
                        worst_carnot = std::max(worst_carnot,
                                                *res.perf.eta - res.perf.eta_carnot);
                }
            }
        }
    }
    c.note("worst |Q_AB - thermal path| = " + num(worst_path) +
           ", worst eta - eta_C = " + num(worst_carnot));
    if (worst_path > 1e-12) c.fail("thermal reduction exceeds 1e-12");
    if (worst_carnot > 1e-12) c.fail("a thermal config beats Carnot");
}

// 6. Carnot surpass exists on the stated grid for both media, never at r = 0.
void criterion_6(Criterion& c) {
    for (Medium medium : {Medium::tls, Medium::ho}) {
        bool surpass = false;
        bool r0_surpass = false;
        for (double th : {1.05, 1.1625, 1.275, 1.3875, 1.5}) {
            for (double r : {0.5, 0.75, 1.0, 1.25, 1.5}) {
                for (double ratio : {2.0, 4.0, 6.0, 8.0}) {
                    const CycleConfig cfg{medium, 1.0, ratio, Reservoir::squeezed(th, r),
                                          Reservoir::thermal(1.0)};
                    const auto res = run_cycle(cfg);
                    if (res.perf.is_engine && *res.perf.eta > res.perf.eta_carnot)
                        surpass = true;
                }
            }
            for (double ratio : {2.0, 4.0, 6.0, 8.0}) {
                const CycleConfig cfg{medium, 1.0, ratio, Reservoir::thermal(th),
                                      Reservoir::thermal(1.0)};
                const auto res = run_cycle(cfg);
                if (res.perf.is_engine && *res.perf.eta > res.perf.eta_carnot)
                    r0_surpass = true;
            }
        }
        c.note(std::string(to_string(medium)) + ": surpass " + (surpass ? "found" : "missing") +
               ", r0 surpass " + (r0_surpass ? "found (bad)" : "none"));
        if (!surpass) c.fail("no squeezed config beats Carnot for " + to_string(medium));
        if (r0_surpass) c.fail("a thermal config beats Carnot for " + to_string(medium));
    }
}

// 7. Effective temperature: T_eff >= T everywhere, equality only at r = 0.
void criterion_7(Criterion& c) {
    double worst_below = 0.0;
    double worst_r0 = 0.0;
    bool strict = true;
    for (double omega : log_grid(1e-2, 20.0, 25)) {
        for (double temp : {0.5, 1.0, 3.0}) {
            worst_r0 = std::max(
                worst_r0, std::abs(tls::effective_temperature(omega, temp, 0.0) - temp));
            for (double r : {0.1, 0.5, 1.0, 2.0}) {
                const double t_eff = tls::effective_temperature(omega, temp, r);
                worst_below = std::max(worst_below, temp - t_eff);
                if (!(t_eff > temp)) strict = false;
            }
        }
    }
    c.note("worst T - T_eff = " + num(worst_below) + ", worst |T_eff(r=0) - T| = " +
           num(worst_r0));
    if (worst_below > 1e-12 || !strict) c.fail("T_eff fell to or below T at r > 0");
    if (worst_r0 > 1e-12) c.fail("equality at r = 0 violated");
}

// 8. Asymptotics: convergence along the stated sequences; the analytic
//    omega2* formulas as stationary points of the series expansions, and
//    against the exact-work maximiser in the deepest regime point.
void criterion_8(Criterion& c) {
    // Convergence, TLS low-T: omega1/T_c in {20, 40, 80}. The regime is doubly
    // asymptotic (omega/T_c large, omega/T_h small); the points deepen both.
    for (double r : {0.0, 0.5, 1.0}) {
        double prev = 1e300;
        bool mono = true;
        for (double k : {20.0, 40.0, 80.0}) {
            const double th = k / 4.0;
            const CycleConfig cfg{Medium::tls, 1.0, 3.0, Reservoir::squeezed(th, r),
                                  Reservoir::thermal(1.0 / k)};
            const double w_exact = run_cycle(cfg).perf.w_total;
            const double rel =
                std::abs(asym::tls_work_low_t(1.0, 3.0, th, r) - w_exact) /
                std::abs(w_exact);
            if (rel >= prev) mono = false;
            prev = rel;
        }
        if (!mono) c.fail("TLS low-T convergence not monotone at r = " + num(r));
    }
    // Convergence, HO high-T: omega2/T_h in {0.1, 0.05, 0.01}.
    for (double r : {0.0, 0.5, 1.0}) {
        double prev = 1e300;
        bool mono = true;
        for (double k : {0.1, 0.05, 0.01}) {
            const double th = 1.0 / k, tc = th / 2.0;
            const CycleConfig cfg{Medium::ho, 0.2, 1.0, Reservoir::squeezed(th, r),
                                  Reservoir::thermal(tc)};
            const double w_exact = run_cycle(cfg).perf.w_total;
            const double rel =
                std::abs(asym::ho_work_high_t(0.2, 1.0, th, tc, r) - w_exact) /
                std::abs(w_exact);
            if (rel >= prev) mono = false;
            prev = rel;
        }
        if (!mono) c.fail("HO high-T convergence not monotone at r = " + num(r));
    }
    c.note("convergence along both stated sequences checked at r in {0, 0.5, 1}");

    // Stationarity: analytic omega2* vs the maximiser of the series W_approx.
    for (double r : {0.0, 0.5, 1.0}) {
        const double th = 2.0;
        const auto mx = asym::numeric_max_work(
            [th, r](double w2) { return asym::tls_work_low_t(0.5, w2, th, r); }, 0.5, 80.0,
            1e-12);
        const double analytic = asym::tls_omega2_max_low_t(th, r);
        const double rel = std::abs(analytic - mx.omega2_star) / mx.omega2_star;
        c.note("TLS low-T r=" + num(r) + ": analytic omega2* = " + num(analytic) +
               ", argmax(W_lt) = " + num(mx.omega2_star) + ", rel = " + num(rel));
        if (rel > 1e-6)
            c.fail("TLS low-T stationarity fails at r = " + num(r) + " (rel " + num(rel) + ")");
    }
    for (double r : {0.0, 0.5, 1.0}) {
        const double th = 2.0, tc = 1.0, eta_c = 0.5;
        const auto mx = asym::numeric_max_work(
            [th, tc, r](double w2) { return asym::ho_work_high_t(0.1, w2, th, tc, r); }, 0.1,
            60.0, 1e-12);
        const double analytic = asym::ho_omega2_max_high_t(tc, eta_c, r);
        const double rel = std::abs(analytic - mx.omega2_star) / mx.omega2_star;
        c.note("HO high-T r=" + num(r) + ": analytic omega2* = " + num(analytic) +
               ", argmax(W_ht) = " + num(mx.omega2_star) + ", rel = " + num(rel));
        if (rel > 1e-6)
            c.fail("HO high-T stationarity fails at r = " + num(r) + " (rel " + num(rel) + ")");
    }

    // Against the exact work in the deepest regime point.
    {
        const CycleConfig base{Medium::tls, 1.0, 3.0, Reservoir::squeezed(2.0, 0.5),
                               Reservoir::thermal(1.0 / 80.0)};
        const auto mx = asym::numeric_max_work_cycle(Medium::tls, 1.0, base.hot, base.cold,
                                                     1.0, 120.0);
        if (!mx.interior) {
            c.fail("exact TLS work has no interior maximum in omega2 (edge at " +
                   num(mx.omega2_star) + "); nothing for the analytic omega2* to match");
        } else {
            const double analytic = asym::tls_omega2_max_low_t(2.0, 0.5);
            if (std::abs(analytic - mx.omega2_star) / mx.omega2_star > 0.05)
                c.fail("analytic TLS omega2* misses the exact maximiser by > 5%");
        }
        const double th = 100.0, tc = 50.0;
        const auto mx_ho = asym::numeric_max_work_cycle(
            Medium::ho, 1.0, Reservoir::squeezed(th, 0.5), Reservoir::thermal(tc), 1.0,
            20.0 * th);
        if (!mx_ho.interior)
            c.fail("exact HO work has no interior maximum in omega2 (edge at " +
                   num(mx_ho.omega2_star) + ")");
    }
}

// 9. Otto limit: first-order low-T efficiency is exactly 1 - omega1/omega2,
//    invariant under rescaling, independent of r.
void criterion_9(Criterion& c) {
    if (asym::tls_eta_mw_low_t(1.0, 5.0, 2.0, 0.9) != 0.8) c.fail("not exactly 0.8 at ratio 5");
    for (double scale : {0.1, 1.0, 7.0}) {
        for (double r : {0.0, 0.6, 1.4}) {
            const double a = asym::tls_eta_mw_low_t(scale * 1.0, scale * 4.0, 3.0, r);
            const double b = asym::tls_eta_mw_low_t(1.0, 4.0, 0.7, 0.0);
            if (a != b) c.fail("rescaling or r changed the first-order value");
        }
    }
    c.note("exact Otto form, scale- and r-invariant");
}

// 10. Figure presets: monotone structure matching the captions, by first
//     differences on the emitted tables.
void criterion_10(Criterion& c) {
    auto column = [](const SweepTable& t, const std::string& name) {
        for (size_t i = 0; i < t.columns.size(); ++i)
            if (t.columns[i] == name) return i;
        throw std::logic_error("missing column " + name);
    };
    // figs 1, 2, 6, 7: W rises with r at every axis point
    for (const char* name : {"fig1", "fig2", "fig6", "fig7"}) {
        const auto p = build_figure_preset(name);
        const size_t wcol = column(p.table, "w_over_tc");
        // r is the faster-varying column: consecutive rows share the axis value
        for (size_t i = 0; i + 1 < p.table.rows.size(); ++i) {
            if (p.table.rows[i][0] != p.table.rows[i + 1][0]) continue;
            if (p.table.rows[i + 1][wcol] - p.table.rows[i][wcol] < -1e-12)
                c.fail(std::string(name) + ": W not monotone in r at axis value " +
                       num(p.table.rows[i][0]));
        }
    }
    // figs 3, 8: eta rises with r
    {
        const auto p3 = build_figure_preset("fig3");
        const size_t ecol = column(p3.table, "eta");
        for (size_t i = 0; i + 1 < p3.table.rows.size(); ++i)
            if (p3.table.rows[i + 1][ecol] - p3.table.rows[i][ecol] < -1e-12)
                c.fail("fig3: eta not monotone in r");
        const auto p8 = build_figure_preset("fig8");
        const size_t ecol8 = column(p8.table, "eta");
        // rows ordered by r then ratio; compare same-ratio neighbours
        const size_t curves = 3;
        for (size_t i = 0; i + curves < p8.table.rows.size(); ++i)
            if (p8.table.rows[i + curves][ecol8] - p8.table.rows[i][ecol8] < -1e-12)
                c.fail("fig8: eta not monotone in r");
    }
    // figs 5, 9: eta rises along both surface directions
    for (const char* name : {"fig5", "fig9"}) {
        const auto p = build_figure_preset(name);
        const size_t ecol = column(p.table, "eta");
        const size_t rcol = column(p.table, "r");
        // group rows by ratio (outer) and r (inner)
        size_t r_steps = 1;
        while (r_steps < p.table.rows.size() &&
               p.table.rows[r_steps][0] == p.table.rows[0][0])
            ++r_steps;
        for (size_t i = 0; i + 1 < p.table.rows.size(); ++i) {
            if (p.table.rows[i][0] == p.table.rows[i + 1][0] &&
                p.table.rows[i + 1][ecol] - p.table.rows[i][ecol] < -1e-12)
                c.fail(std::string(name) + ": eta not monotone in r");
            const size_t j = i + r_steps;
            if (j < p.table.rows.size() &&
                p.table.rows[i][rcol] == p.table.rows[j][rcol] &&
                p.table.rows[j][ecol] - p.table.rows[i][ecol] < -1e-12)
                c.fail(std::string(name) + ": eta not monotone in omega2/omega1");
        }
    }
    c.note("first differences checked on every preset table");
}

}  // namespace

int main(int argc, char** argv) {
    const struct {
        int id;
        const char* title;
        void (*fn)(Criterion&);
        double budget_s;
    } table[] = {
        {1, "TLS oracle equivalence (entropy, energy)", criterion_1, 1.0},
        {2, "Lindblad fixed point vs closed form", criterion_2, 10.0},
        {3, "HO oracle equivalence (truncated Fock energy)", criterion_3, 30.0},
        {4, "first law, closure, efficiency forms", criterion_4, 5.0},
        {5, "thermal reduction and Carnot respect at r = 0", criterion_5, 5.0},
        {6, "Carnot surpass existence", criterion_6, 5.0},
        {7, "effective temperature dominance", criterion_7, 5.0},
        {8, "asymptotic convergence and analytic maximisers", criterion_8, 30.0},
        {9, "Otto limit of the low-T efficiency", criterion_9, 1.0},
        {10, "figure-data regeneration structure", criterion_10, 30.0},
    };

    int only = 0;
    if (argc == 3 && std::string(argv[1]) == "--criterion") only = std::atoi(argv[2]);

    int failures = 0;
    for (const auto& entry : table) {
        if (only != 0 && entry.id != only) continue;
        Criterion c{entry.id, entry.title};
        const auto t0 = std::chrono::steady_clock::now();
        try {
            entry.fn(c);
        } catch (const std::exception& e) {
            c.fail(std::string("exception: ") + e.what());
        }
        c.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (c.seconds > entry.budget_s)
            c.fail("runtime " + num(c.seconds) + " s exceeds budget " + num(entry.budget_s) +
                   " s");
        std::printf("[%s] criterion %2d: %s (%.2f s)\n", c.pass ? "PASS" : "FAIL", c.id,
                    c.title.c_str(), c.seconds);
        for (const auto& n : c.notes) std::printf("         - %s\n", n.c_str());
        if (!c.pass) ++failures;
    }
    if (failures)
        std::printf("%d criterion(s) failed\n", failures);
    else
        std::printf("all criteria passed\n");
    return failures;
}
