#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bellgrid {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double elapsed_ms = 0.0;
  double limit_ms = 0.0;
};

/// Runs the full acceptance suite. Every criterion is self-contained and
/// deterministic (fixed seeds, fixed grids).
std::vector<CriterionResult> run_acceptance();

/// Prints one pass/fail line per criterion; returns true iff all pass.
bool report_acceptance(const std::vector<CriterionResult>& results, std::ostream& out);

}  // namespace bellgrid
