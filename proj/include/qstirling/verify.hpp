#pragma once

#include <string>
#include <vector>

namespace qstirling::verify {

struct CheckResult {
    std::string name;
    bool pass = false;
    double measured = 0.0;    // worst value observed
    double threshold = 0.0;
    std::string detail;
};

// The full oracle-vs-closed-form suite. tolerance_scale multiplies every
// threshold (>1 loosens).
std::vector<CheckResult> run_all_checks(double tolerance_scale = 1.0);

bool all_passed(const std::vector<CheckResult>& results);

}  // namespace qstirling::verify
