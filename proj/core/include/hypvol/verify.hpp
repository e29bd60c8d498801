#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace hypvol::verify {

struct CheckResult {
  std::string name;
  bool pass = false;
  double deviation = 0.0;  // measured worst deviation for the check
  std::string detail;
};

// Runs the invariant suites of every module. `full` uses the production
// sample sizes; the quick profile stays within interactive runtimes.
std::vector<CheckResult> run_verify(bool full, std::uint64_t seed);

}  // namespace hypvol::verify
