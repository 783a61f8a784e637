#pragma once

#include <string>
#include <vector>

#include "aristotle/app/app.hpp"

namespace aristotle::app {

struct CheckResult {
  std::string name;
  bool passed = true;
  std::size_t samples = 0;
  std::string detail;  ///< first counterexample when failed
};

/// Mutation ids accepted by `verify --mutate`.
const std::vector<std::string>& known_mutations();

/// Runs the whole suite. Exact checks use the configured backend; the
/// finite-difference, integrator and kernel checks always run in double.
std::vector<CheckResult> run_checks(const RunConfig& config);

}  // namespace aristotle::app
