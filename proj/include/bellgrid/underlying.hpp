#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "bellgrid/scenario.hpp"
#include "bellgrid/value.hpp"

namespace bellgrid {

/// The underlying distribution rho over hidden-variable cells, stored dense
/// by flat cell index. Nonnegative and normalized; arithmetic mode fixed at
/// construction.
class UnderlyingDist {
 public:
  UnderlyingDist(Scenario sc, std::vector<Value> weights, double tol = 1e-9);

  static UnderlyingDist uniform(const Scenario& sc);
  static UnderlyingDist point_mass(const Scenario& sc, std::size_t flat_cell);

  const Scenario& scenario() const { return scen_; }
  Mode mode() const { return mode_; }
  const std::vector<Value>& weights() const { return w_; }
  const Value& weight(std::size_t flat) const { return w_.at(flat); }

 private:
  Scenario scen_;
  Mode mode_;
  std::vector<Value> w_;
};

/// Observable joint outcome distribution for one setting vector.
struct MarginalTable {
  Scenario scenario{1, 1};
  SettingVector settings;
  std::vector<Value> probs;  // indexed by outcome_index

  Mode mode() const;
  const Value& prob(const std::vector<std::uint8_t>& o) const;
  void validate(double tol = 1e-9) const;
};

/// One table per setting vector, indexed by setting_vector_index.
struct MarginalSet {
  Scenario scenario{1, 1};
  std::vector<MarginalTable> tables;

  Mode mode() const;
  const MarginalTable& table(const SettingVector& s) const;
  void validate(double tol = 1e-9) const;
};

/// Single-party outcome probabilities P_{p,k}(A); stores P(0), with
/// P(1) = 1 - P(0). Entry for party p, setting k at index k*n + p.
struct SingleSiteSet {
  Scenario scenario{1, 1};
  std::vector<Value> prob_zero;

  const Value& p0(int party, int setting) const {
    return prob_zero[static_cast<std::size_t>(setting) * scenario.parties() + party];
  }
};

/// Full hidden-variable distribution W over all 2^8 byte values, for the
/// two-party two-setting scenario only. Byte bit order:
/// A00,B00,A10,B10,A01,B01,A11,B11 (pair slot a+2b, A at bit 2*slot).
class FullHiddenVariableDist {
 public:
  explicit FullHiddenVariableDist(std::vector<Value> weights, double tol = 1e-9);

  Mode mode() const { return mode_; }
  const std::vector<Value>& weights() const { return w_; }

  static constexpr std::size_t kCells = 256;

 private:
  Mode mode_;
  std::vector<Value> w_;
};

MarginalTable marginalize(const UnderlyingDist& rho, const SettingVector& s);
MarginalSet marginalize_all(const UnderlyingDist& rho);

/// Product distribution: weight(lambda) = prod over (p,k) of P_{p,k}(A_{p,k}).
UnderlyingDist product_dist(const SingleSiteSet& singles, double tol = 1e-9);

/// One instance of the cross-factorization identity: exchanging the
/// per-party (setting, outcome) slots of two tables between the two sides.
struct FactorizationViolation {
  SettingVector s_left, s_right;
  std::vector<std::uint8_t> o_left, o_right;
  std::vector<int> swapped_parties;
  double residual;
};

struct FactorizationReport {
  std::size_t instances_checked = 0;
  double max_residual = 0.0;
  std::vector<FactorizationViolation> violations;
  bool holds() const { return violations.empty(); }
};

/// Checks every instance of P_s(o) P_t(o') = P_s'(o'') P_t'(o''') obtained by
/// swapping a party subset's (setting, outcome) pairs across the two factors.
FactorizationReport check_factorization(const MarginalSet& ms, double tol = 1e-9);

/// Lifts rho to the full hidden-variable distribution supported on the
/// locality-consistent subspace (n=2, m=2 only).
FullHiddenVariableDist embed_local(const UnderlyingDist& rho);

struct LocalReduction {
  bool local;                          // all mass on the consistent subspace
  std::optional<UnderlyingDist> rho;   // present iff local
  Value off_subspace_mass;
};

LocalReduction reduce_local(const FullHiddenVariableDist& w, double tol = 1e-9);

MarginalSet full_marginals(const FullHiddenVariableDist& w);

}  // namespace bellgrid
