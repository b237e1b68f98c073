#pragma once

#include <complex>
#include <vector>

#include "bellgrid/inequality.hpp"
#include "bellgrid/scenario.hpp"
#include "bellgrid/underlying.hpp"

namespace bellgrid {

using Amplitude = std::complex<double>;

/// Normalized n-qubit pure state; party p is qubit p (bit p of the amplitude
/// index, Alice least significant).
class PureState {
 public:
  explicit PureState(std::vector<Amplitude> amplitudes, double tol = 1e-12);

  int qubits() const { return qubits_; }
  const std::vector<Amplitude>& amplitudes() const { return amp_; }

  static PureState computational(int qubits, std::size_t basis_index);
  static PureState singlet();
  /// (|0...0> + sign |1...1>)/sqrt(2)
  static PureState ghz(int qubits, int sign = +1);

 private:
  int qubits_;
  std::vector<Amplitude> amp_;
};

/// Bloch-sphere measurement direction, polar angles in radians.
struct Axis {
  double theta = 0.0;
  double phi = 0.0;
};

/// One axis per (party, setting); entry for party p, setting k at k*n + p.
struct AxisChoice {
  Scenario scenario{1, 1};
  std::vector<Axis> axes;

  const Axis& axis(int party, int setting) const {
    return axes[static_cast<std::size_t>(setting) * scenario.parties() + party];
  }
  void validate() const;
};

/// Projective-measurement outcome probabilities under the Born rule, with
/// projector (I + (-1)^A n.sigma)/2 for outcome A along axis n.
MarginalSet born_marginals(const PureState& state, const AxisChoice& axes);

double born_probability(const PureState& state, const AxisChoice& axes, const SettingVector& s,
                        const std::vector<std::uint8_t>& o);

struct ViolationReport {
  double best_value = 0.0;
  AxisChoice best_axes;
  int grid_steps = 0;
  bool refined = false;
  bool violation = false;  // best_value below zero beyond refinement noise
};

/// Minimizes evaluate(form, born_marginals(state, axes)) over a uniform
/// (theta, phi) axis grid, then refines by coordinate descent. By default phi
/// is restricted to multiples of pi/2 during the grid stage; pass full_sphere
/// to scan phi uniformly as well.
ViolationReport violation_scan(const LinearForm& form, const PureState& state, int grid_steps,
                               bool full_sphere = false, double refine_tol = 1e-6);

struct GhzReport {
  double c001 = 0.0, c010 = 0.0, c100 = 0.0, c111 = 0.0;
  double lhs = 0.0;  // C_111 - C_001 - C_010 - C_100
  bool violates_bound = false;
};

/// Evaluates the three-party correlation bound on the GHZ state with the
/// fixed axis convention: state (|000> - |111>)/sqrt(2), setting 0 -> y axis,
/// setting 1 -> x axis. Under this convention the three single-flip
/// correlations are +1 and the bound -2 is violated at -4.
GhzReport ghz_check();

struct HardyScanResult {
  double best_probability = 0.0;
  std::vector<double> thetas;  // a0, a1, b0, b1
  PureState state{std::vector<Amplitude>{1.0, 0.0, 0.0, 0.0}};
  int grid_steps = 0;
};

/// Maximal P_00(0,0) subject to P_10(0,0) = P_01(0,0) = P_11(1,1) = 0, over
/// two-qubit states and real measurement angles. For fixed angles the three
/// zeros pin the state to the orthogonal complement of three product vectors,
/// so the scan ranges over angles and reads the state off the constraints.
HardyScanResult hardy_probability_scan(int grid_steps, double refine_tol = 1e-9);

}  // namespace bellgrid
