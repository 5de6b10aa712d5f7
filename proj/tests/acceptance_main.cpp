// Acceptance gate: one [PASS]/[FAIL] line per criterion, nonzero exit on
// any failure.

#include <cstdio>

#include "acceptance_suite.hpp"

int main() {
  const auto outcomes = sectorlen::acceptance::run_all(/*progress=*/true);
  int failed = 0;
  for (const auto& outcome : outcomes) {
    if (!outcome.passed) ++failed;
  }
  if (failed > 0) {
    std::printf("%d criterion(s) failed\n", failed);
    return 1;
  }
  std::printf("all %zu criteria passed\n", outcomes.size());
  return 0;
}
