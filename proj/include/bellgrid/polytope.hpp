#pragma once

#include <optional>
#include <vector>

#include "bellgrid/inequality.hpp"
#include "bellgrid/underlying.hpp"

namespace bellgrid {

/// Linear feasibility problem for local-model membership: find rho >= 0 with
/// one marginal equality per (setting vector, outcome) pair plus the
/// (redundant) normalization row.
struct FeasibilityProblem {
  Scenario scenario{1, 1};
  std::size_t variables = 0;
  // constraint rows as supports (0/1 coefficients) and right-hand sides
  std::vector<std::vector<std::size_t>> supports;
  std::vector<Value> rhs;
};

FeasibilityProblem build_feasibility_problem(const MarginalSet& ms);

struct MembershipResult {
  bool feasible = false;
  std::optional<UnderlyingDist> witness;  // present iff feasible
  double max_residual = 0.0;              // max |marginal mismatch| of witness
};

/// Decides whether any nonnegative normalized rho reproduces the marginal
/// set, by two-phase simplex with Bland's rule. Exact when ms is rational;
/// float inputs use the given feasibility tolerance.
MembershipResult membership(const MarginalSet& ms, double tol = 1e-8);

struct CrossValidationReport {
  bool membership_feasible = false;
  std::vector<Value> form_values;
  bool all_forms_nonnegative = true;
  // feasible point violating a certified form: must never happen
  bool soundness_violation = false;
  // all supplied forms pass but no model exists: catalog incompleteness
  bool catalog_gap = false;
};

CrossValidationReport cross_validate(const MarginalSet& ms, const std::vector<LinearForm>& forms,
                                     double tol = 1e-8);

}  // namespace bellgrid
