// The acceptance criteria as a reusable suite: the acceptance test binary
// runs it as the CI gate, and the CLI `repro` subcommand runs it when
// producing its report.
#pragma once

#include <string>
#include <vector>

namespace sectorlen::acceptance {

struct CriterionOutcome {
  std::string label;
  bool passed = false;
  double seconds = 0.0;
  std::vector<std::string> notes;  // failure details, capped
};

/// Runs all criteria in order. When `progress` is true, prints one
/// [PASS]/[FAIL] line per criterion to stdout as it goes.
std::vector<CriterionOutcome> run_all(bool progress);

}  // namespace sectorlen::acceptance
