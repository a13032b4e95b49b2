#pragma once

#include <string>
#include <vector>

namespace ope {

struct CriterionResult {
    int id;
    std::string name;
    bool passed;
    bool informational;  // reported but never fails the battery
    std::string details;
};

/// Runs the full verification battery (route equalities, oracles,
/// identity-in-t suites, equilibrium and Schur cross-checks) at the given
/// working precision. Each entry prints one line of evidence; informational
/// entries (the printed-equation adjudication) never affect the overall
/// outcome.
std::vector<CriterionResult> run_verification_battery(int digits);

/// True when every non-informational criterion passed.
bool battery_passed(const std::vector<CriterionResult>& results);

}  // namespace ope
