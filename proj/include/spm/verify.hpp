#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "spm/diagram.hpp"

namespace spm {

struct SuiteResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Invariant suites at grain bound n: lattice checks, successor laws,
/// incremental equality, count agreement, shot-vector order, filters,
/// and the tree properties.
std::vector<SuiteResult> verify_all(int n, Budget budget = {});

/// One "PASS name" or "FAIL name: detail" line per suite; true when all pass.
bool print_suites(const std::vector<SuiteResult>& results, std::ostream& out);

}  // namespace spm
