#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qstirling/asymptotics.hpp"
#include "qstirling/cycle.hpp"
#include "qstirling/ho.hpp"
#include "qstirling/reservoir.hpp"
#include "qstirling/tls.hpp"
#include "qstirling/verify.hpp"

namespace py = pybind11;
using namespace qstirling;

PYBIND11_MODULE(_qstirling, m) {
    m.doc() = "quantum Stirling engine with a squeezed hot reservoir";

    py::class_<Reservoir>(m, "Reservoir")
        .def(py::init<>())
        .def(py::init([](double temperature, double r, double phi) {
                 Reservoir res{temperature, r, phi};
                 res.validate();
                 return res;
             }),
             py::arg("temperature"), py::arg("squeeze_r") = 0.0, py::arg("squeeze_phi") = 0.0)
        .def_readwrite("temperature", &Reservoir::temperature)
        .def_readwrite("squeeze_r", &Reservoir::squeeze_r)
        .def_readwrite("squeeze_phi", &Reservoir::squeeze_phi)
        .def("__repr__", [](const Reservoir& r) {
            return "Reservoir(T=" + std::to_string(r.temperature) +
                   ", r=" + std::to_string(r.squeeze_r) + ")";
        });

    py::enum_<Medium>(m, "Medium")
        .value("tls", Medium::tls)
        .value("ho", Medium::ho);

    py::class_<StrokeLedger>(m, "StrokeLedger")
        .def_readonly("q_ab", &StrokeLedger::q_ab)
        .def_readonly("w_ab", &StrokeLedger::w_ab)
        .def_readonly("q_bc", &StrokeLedger::q_bc)
        .def_readonly("q_cd", &StrokeLedger::q_cd)
        .def_readonly("w_cd", &StrokeLedger::w_cd)
        .def_readonly("q_da", &StrokeLedger::q_da)
        .def("heat_total", &StrokeLedger::heat_total)
        .def("work_total", &StrokeLedger::work_total);

    py::class_<CyclePerformance>(m, "CyclePerformance")
        .def_readonly("w_total", &CyclePerformance::w_total)
        .def_readonly("q_hot", &CyclePerformance::q_hot)
        .def_readonly("eta", &CyclePerformance::eta)
        .def_readonly("eta_carnot", &CyclePerformance::eta_carnot)
        .def_readonly("eta_curzon_ahlborn", &CyclePerformance::eta_curzon_ahlborn)
        .def_readonly("is_engine", &CyclePerformance::is_engine);

    py::class_<CycleResult>(m, "CycleResult")
        .def_readonly("ledger", &CycleResult::ledger)
        .def_readonly("perf", &CycleResult::perf);

    m.def(
        "run_cycle",
        [](Medium medium, double omega1, double omega2, const Reservoir& hot,
           const Reservoir& cold) {
            return run_cycle(CycleConfig{medium, omega1, omega2, hot, cold});
        },
        py::arg("medium"), py::arg("omega1"), py::arg("omega2"), py::arg("hot"),
        py::arg("cold"));

    m.def("thermal_occupation", &thermal_occupation, py::arg("omega"), py::arg("temperature"));
    m.def(
        "squeezed_occupancy",
        [](double omega, const Reservoir& res) {
            const auto occ = squeezed_occupancy(omega, res);
            return py::make_tuple(occ.n, occ.big_n, occ.m_mag);
        },
        py::arg("omega"), py::arg("reservoir"), "returns (n, N, |M|)");

    auto tls_mod = m.def_submodule("tls", "two-level working medium");
    tls_mod.def("internal_energy", &tls::internal_energy);
    tls_mod.def("entropy", &tls::entropy);
    tls_mod.def("steady_state", [](double omega, const Reservoir& res) {
        const auto p = tls::steady_state(omega, res);
        return py::make_tuple(p.excited, p.ground);
    });
    tls_mod.def("effective_temperature", &tls::effective_temperature, py::arg("omega"),
                py::arg("temperature"), py::arg("r"));
    tls_mod.def("coefficient_f", &tls::coefficient_f);
    tls_mod.def("coefficient_g", &tls::coefficient_g);

    auto ho_mod = m.def_submodule("ho", "harmonic-oscillator working medium");
    ho_mod.def("internal_energy", &ho::internal_energy);
    ho_mod.def("coefficient_f", &ho::coefficient_f);
    ho_mod.def("total_work", &ho::total_work);

    auto asym_mod = m.def_submodule("asymptotics", "regime expansions and maximisers");
    py::class_<asym::MaxWork>(asym_mod, "MaxWork")
        .def_readonly("omega2_star", &asym::MaxWork::omega2_star)
        .def_readonly("w_star", &asym::MaxWork::w_star)
        .def_readonly("interior", &asym::MaxWork::interior);
    asym_mod.def("tls_work_high_t", &asym::tls_work_high_t);
    asym_mod.def(
        "tls_work_low_t",
        [](double w1, double w2, double th, double r, bool second) {
            return asym::tls_work_low_t(w1, w2, th, r,
                                        second ? asym::Order::second : asym::Order::first);
        },
        py::arg("omega1"), py::arg("omega2"), py::arg("t_hot"), py::arg("r"),
        py::arg("second_order") = true);
    asym_mod.def("tls_omega2_max_low_t", &asym::tls_omega2_max_low_t);
    asym_mod.def(
        "tls_eta_mw_low_t",
        [](double w1, double w2, double th, double r, bool second) {
            return asym::tls_eta_mw_low_t(w1, w2, th, r,
                                          second ? asym::Order::second : asym::Order::first);
        },
        py::arg("omega1"), py::arg("omega2"), py::arg("t_hot"), py::arg("r"),
        py::arg("second_order") = false);
    asym_mod.def("ho_omega2_max_low_t", &asym::ho_omega2_max_low_t);
    asym_mod.def("ho_omega2_max_high_t", &asym::ho_omega2_max_high_t);
    asym_mod.def(
        "numeric_max_work",
        [](const std::function<double(double)>& f, double lo, double hi, double rel_tol) {
            return asym::numeric_max_work(f, lo, hi, rel_tol);
        },
        py::arg("f"), py::arg("lo"), py::arg("hi"), py::arg("rel_tol") = 1e-10);
    asym_mod.def(
        "numeric_max_work_cycle",
        [](Medium medium, double omega1, const Reservoir& hot, const Reservoir& cold, double lo,
           double hi) { return asym::numeric_max_work_cycle(medium, omega1, hot, cold, lo, hi); },
        py::arg("medium"), py::arg("omega1"), py::arg("hot"), py::arg("cold"), py::arg("lo"),
        py::arg("hi"));

    m.def(
        "verify",
        [](double tolerance_scale) {
            py::list out;
            for (const auto& c : verify::run_all_checks(tolerance_scale)) {
                py::dict d;
                d["name"] = c.name;
                d["pass"] = c.pass;
                d["measured"] = c.measured;
                d["threshold"] = c.threshold;
                out.append(std::move(d));
            }
            return out;
        },
        py::arg("tolerance_scale") = 1.0, "run the oracle-vs-closed-form check matrix");
}
