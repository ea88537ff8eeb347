#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qstirling/reservoir.hpp"

namespace qstirling {

enum class Medium { tls, ho };

std::string to_string(Medium m);
Medium medium_from_string(const std::string& name);

// One Stirling cycle: hot isothermal A(omega2)->B(omega1), isochoric B->C at
// omega1, cold isothermal C(omega1)->D(omega2), isochoric D->A at omega2.
struct CycleConfig {
    Medium medium = Medium::tls;
    double omega1 = 1.0;
    double omega2 = 2.0;
    Reservoir hot;
    Reservoir cold;

    void validate() const;
};

struct StrokeLedger {
    double q_ab = 0.0;
    double w_ab = 0.0;
    double q_bc = 0.0;
    double q_cd = 0.0;
    double w_cd = 0.0;
    double q_da = 0.0;

    double heat_total() const { return q_ab + q_bc + q_cd + q_da; }
    double work_total() const { return w_ab + w_cd; }
};

struct CyclePerformance {
    double w_total = 0.0;
    double q_hot = 0.0;               // Q_AB + Q_DA
    std::optional<double> eta;        // only in the engine regime (q_hot > 0)
    double eta_carnot = 0.0;
    double eta_curzon_ahlborn = 0.0;
    bool is_engine = false;
};

struct CycleResult {
    StrokeLedger ledger;
    CyclePerformance perf;
};

CycleResult run_cycle(const CycleConfig& config);

enum class SweepAxis { omega_ratio, temp_ratio, squeeze, surface };

SweepAxis sweep_axis_from_string(const std::string& name);
std::string to_string(SweepAxis axis);

struct SweepSpec {
    Medium medium = Medium::tls;
    SweepAxis axis = SweepAxis::omega_ratio;
    double omega1 = 1.0;
    double omega2 = 5.0;      // fixed omega2 for temp_ratio / squeeze axes
    double t_hot = 2.0;
    double t_cold = 1.0;
    double axis_min = 1.0;
    double axis_max = 10.0;
    int steps = 10;
    std::vector<double> r_values{0.0};  // per-curve r for omega_ratio / temp_ratio axes
    double r_min = 0.0;                 // squeeze axis range, surface r range
    double r_max = 1.0;
    int r_steps = 5;                    // surface only
};

struct SweepTable {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
};

// Deterministic row order: outer axis ascending, then r ascending.
SweepTable sweep(const SweepSpec& spec);

}  // namespace qstirling
