#pragma once

// Self-check suite: every closed form against its independent route, plus the
// structural invariants, evaluated on grids of a chosen density.

#include <string>
#include <vector>

namespace mqd {

struct VerifyOptions {
  int grid = 15;              // points per axis for the oracle grids, >= 4
  double perturbation = 0.0;  // added to the closed-form discord (negative control)
};

struct CheckResult {
  std::string name;
  double worst = 0.0;      // worst observed deviation (or violation)
  double tolerance = 0.0;
  bool passed = false;
};

std::vector<CheckResult> run_verification(const VerifyOptions& opts);

bool all_passed(const std::vector<CheckResult>& results);

}  // namespace mqd
