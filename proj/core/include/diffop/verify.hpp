#pragma once

#include <string>
#include <vector>

#include "diffop/quotient.hpp"

namespace diffop {

struct SuiteResult {
  std::string name;
  bool passed;
  std::string detail;  // empty on success, first failure otherwise
};

// The nine suite names, in running order.
const std::vector<std::string>& suite_names();

bool is_suite_name(const std::string& name);

// Runs every suite, or just the named one. Randomized checks use fixed seeds,
// so results are reproducible. Throws Error for an unknown name.
std::vector<SuiteResult> run_property_suites(const RingPtr& ring,
                                             const std::string& only = "");

}  // namespace diffop
