#include "bellgrid/quantum.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace bellgrid {

namespace {

constexpr double kPi = std::numbers::pi;

// Spin-up eigenvector along (theta, phi).
std::pair<Amplitude, Amplitude> up_vector(const Axis& ax) {
  return {Amplitude(std::cos(ax.theta / 2.0), 0.0),
          std::polar(std::sin(ax.theta / 2.0), ax.phi)};
}

// Spin-down eigenvector, orthogonal to up.
std::pair<Amplitude, Amplitude> down_vector(const Axis& ax) {
  return {-std::polar(std::sin(ax.theta / 2.0), -ax.phi),
          Amplitude(std::cos(ax.theta / 2.0), 0.0)};
}

// Applies the rank-1 projector |w><w| on qubit p in place.
void project_qubit(std::vector<Amplitude>& amp, int p,
                   const std::pair<Amplitude, Amplitude>& w) {
  const std::size_t stride = std::size_t{1} << p;
  for (std::size_t base = 0; base < amp.size(); ++base) {
    if (base & stride) continue;
    const std::size_t hi = base | stride;
    const Amplitude overlap = std::conj(w.first) * amp[base] + std::conj(w.second) * amp[hi];
    amp[base] = w.first * overlap;
    amp[hi] = w.second * overlap;
  }
}

double norm_sq(const std::vector<Amplitude>& amp) {
  double s = 0.0;
  for (const auto& a : amp) s += std::norm(a);
  return s;
}

}  // namespace

PureState::PureState(std::vector<Amplitude> amplitudes, double tol)
    : qubits_(0), amp_(std::move(amplitudes)) {
  std::size_t dim = amp_.size();
  if (dim == 0 || (dim & (dim - 1)) != 0)
    throw std::invalid_argument("PureState: amplitude count must be a power of two");
  while (dim > 1) {
    dim >>= 1;
    ++qubits_;
  }
  if (std::abs(norm_sq(amp_) - 1.0) > tol)
    throw std::invalid_argument("PureState: state must be normalized");
}

PureState PureState::computational(int qubits, std::size_t basis_index) {
  std::vector<Amplitude> amp(std::size_t{1} << qubits, Amplitude(0.0));
  amp.at(basis_index) = Amplitude(1.0);
  return PureState(std::move(amp));
}

PureState PureState::singlet() {
  const double r = 1.0 / std::sqrt(2.0);
  // (|01> - |10>)/sqrt(2) in |A B> labels, index = A + 2B.
  std::vector<Amplitude> amp(4, Amplitude(0.0));
  amp[2] = Amplitude(r);   // A=0, B=1
  amp[1] = Amplitude(-r);  // A=1, B=0
  return PureState(std::move(amp));
}

PureState PureState::ghz(int qubits, int sign) {
  const double r = 1.0 / std::sqrt(2.0);
  std::vector<Amplitude> amp(std::size_t{1} << qubits, Amplitude(0.0));
  amp.front() = Amplitude(r);
  amp.back() = Amplitude(sign >= 0 ? r : -r);
  return PureState(std::move(amp));
}

void AxisChoice::validate() const {
  const auto need = static_cast<std::size_t>(scenario.parties()) * scenario.settings();
  if (axes.size() != need)
    throw std::invalid_argument("AxisChoice: need one axis per (party, setting)");
  for (const auto& ax : axes)
    if (ax.theta < 0.0 || ax.theta > kPi + 1e-12)
      throw std::invalid_argument("AxisChoice: theta out of [0, pi]");
}

double born_probability(const PureState& state, const AxisChoice& axes, const SettingVector& s,
                        const std::vector<std::uint8_t>& o) {
  const Scenario& sc = axes.scenario;
  validate_settings(sc, s);
  validate_outcomes(sc, o);
  if (state.qubits() != sc.parties())
    throw std::invalid_argument("born_probability: state/scenario party mismatch");
  std::vector<Amplitude> amp = state.amplitudes();
  for (int p = 0; p < sc.parties(); ++p) {
    const Axis& ax = axes.axis(p, s.s[p]);
    project_qubit(amp, p, o[p] == 0 ? up_vector(ax) : down_vector(ax));
  }
  return norm_sq(amp);
}

MarginalSet born_marginals(const PureState& state, const AxisChoice& axes) {
  const Scenario& sc = axes.scenario;
  axes.validate();
  if (state.qubits() != sc.parties())
    throw std::invalid_argument("born_marginals: state/scenario party mismatch");
  MarginalSet ms;
  ms.scenario = sc;
  for (std::size_t si = 0; si < sc.setting_vector_count(); ++si) {
    const SettingVector s = setting_vector_from_index(sc, si);
    MarginalTable t;
    t.scenario = sc;
    t.settings = s;
    for (std::size_t oi = 0; oi < sc.outcome_count(); ++oi)
      t.probs.push_back(Value(born_probability(state, axes, s, outcome_from_index(sc, oi))));
    ms.tables.push_back(std::move(t));
  }
  return ms;
}

namespace {

double objective(const LinearForm& form, const PureState& state, const AxisChoice& axes) {
  return evaluate(form, born_marginals(state, axes)).to_double();
}

// Cycles through all (theta, phi) parameters, trying +-step moves, halving
// the step whenever a full cycle brings no improvement.
template <typename F>
double coordinate_descent(std::vector<double>& params, double step, double tol, F&& eval) {
  double best = eval(params);
  while (step > tol) {
    bool improved = false;
    for (std::size_t i = 0; i < params.size(); ++i) {
      for (double dir : {+1.0, -1.0}) {
        const double saved = params[i];
        params[i] = saved + dir * step;
        const double v = eval(params);
        if (v < best - 1e-15) {
          best = v;
          improved = true;
        } else {
          params[i] = saved;
        }
      }
    }
    if (!improved) step *= 0.5;
  }
  return best;
}

}  // namespace

ViolationReport violation_scan(const LinearForm& form, const PureState& state, int grid_steps,
                               bool full_sphere, double refine_tol) {
  const Scenario& sc = form.scenario();
  if (grid_steps < 2) throw std::invalid_argument("violation_scan: grid_steps must be >= 2");
  if (state.qubits() != sc.parties())
    throw std::invalid_argument("violation_scan: state/scenario party mismatch");

  const std::size_t naxes = static_cast<std::size_t>(sc.parties()) * sc.settings();
  std::vector<double> thetas, phis;
  for (int t = 0; t < grid_steps; ++t)
    thetas.push_back(kPi * t / (grid_steps - 1));
  if (full_sphere) {
    for (int u = 0; u < grid_steps; ++u) phis.push_back(2.0 * kPi * u / grid_steps);
  } else {
    phis = {0.0, kPi / 2.0};  // principal planes
  }

  const std::size_t options = thetas.size() * phis.size();
  std::size_t total = 1;
  for (std::size_t i = 0; i < naxes; ++i) {
    if (total > (std::size_t{1} << 40) / options)
      throw std::invalid_argument("violation_scan: grid too large for this scenario");
    total *= options;
  }

  ViolationReport rep;
  rep.grid_steps = grid_steps;
  rep.best_value = std::numeric_limits<double>::infinity();

  AxisChoice axes;
  axes.scenario = sc;
  axes.axes.resize(naxes);
  for (std::size_t combo = 0; combo < total; ++combo) {
    std::size_t c = combo;
    for (std::size_t i = 0; i < naxes; ++i) {
      const std::size_t opt = c % options;
      c /= options;
      axes.axes[i] = {thetas[opt / phis.size()], phis[opt % phis.size()]};
    }
    const double v = objective(form, state, axes);
    if (v < rep.best_value) {
      rep.best_value = v;
      rep.best_axes = axes;
    }
  }

  // Local refinement around the best grid point.
  std::vector<double> params;
  for (const auto& ax : rep.best_axes.axes) {
    params.push_back(ax.theta);
    params.push_back(ax.phi);
  }
  AxisChoice work = rep.best_axes;
  auto eval = [&](const std::vector<double>& p) {
    for (std::size_t i = 0; i < naxes; ++i)
      work.axes[i] = {std::clamp(p[2 * i], 0.0, kPi), p[2 * i + 1]};
    return objective(form, state, work);
  };
  rep.best_value = coordinate_descent(params, kPi / (grid_steps - 1), refine_tol, eval);
  for (std::size_t i = 0; i < naxes; ++i) rep.best_axes.axes[i] = {params[2 * i], params[2 * i + 1]};
  rep.refined = true;
  // refinement noise on a nonnegative optimum can land a hair below zero
  rep.violation = rep.best_value < -1e-9;
  return rep;
}

GhzReport ghz_check() {
  const Scenario sc(3, 2);
  const PureState state = PureState::ghz(3, -1);
  AxisChoice axes;
  axes.scenario = sc;
  const Axis y{kPi / 2.0, kPi / 2.0};
  const Axis x{kPi / 2.0, 0.0};
  // setting 0 -> y, setting 1 -> x, for every party
  axes.axes = {y, y, y, x, x, x};
  const MarginalSet ms = born_marginals(state, axes);
  auto corr = [&](std::vector<int> s) {
    return correlation(ms.table(SettingVector{std::move(s)})).to_double();
  };
  GhzReport rep;
  rep.c001 = corr({0, 0, 1});
  rep.c010 = corr({0, 1, 0});
  rep.c100 = corr({1, 0, 0});
  rep.c111 = corr({1, 1, 1});
  rep.lhs = rep.c111 - rep.c001 - rep.c010 - rep.c100;
  rep.violates_bound = rep.lhs < -2.0;
  return rep;
}

namespace {

using Vec4 = std::array<Amplitude, 4>;

Vec4 product_vec(const std::pair<Amplitude, Amplitude>& alice,
                 const std::pair<Amplitude, Amplitude>& bob) {
  // index = A + 2B
  return {alice.first * bob.first, alice.second * bob.first, alice.first * bob.second,
          alice.second * bob.second};
}

Amplitude dot(const Vec4& a, const Vec4& b) {
  Amplitude s = 0.0;
  for (int i = 0; i < 4; ++i) s += std::conj(a[i]) * b[i];
  return s;
}

// Largest achievable |<target|psi>|^2 over unit psi orthogonal to the
// constraint vectors: the squared norm of the projection of target onto the
// constraints' orthogonal complement.
double constrained_overlap(const std::vector<Vec4>& constraints, const Vec4& target,
                           Vec4* best_state) {
  std::vector<Vec4> basis;
  for (Vec4 v : constraints) {
    for (const Vec4& e : basis) {
      const Amplitude c = dot(e, v);
      for (int i = 0; i < 4; ++i) v[i] -= c * e[i];
    }
    double n2 = 0.0;
    for (const auto& a : v) n2 += std::norm(a);
    if (n2 > 1e-24) {
      const double inv = 1.0 / std::sqrt(n2);
      for (auto& a : v) a *= inv;
      basis.push_back(v);
    }
  }
  Vec4 residual = target;
  for (const Vec4& e : basis) {
    const Amplitude c = dot(e, residual);
    for (int i = 0; i < 4; ++i) residual[i] -= c * e[i];
  }
  double n2 = 0.0;
  for (const auto& a : residual) n2 += std::norm(a);
  if (best_state != nullptr && n2 > 1e-24) {
    const double inv = 1.0 / std::sqrt(n2);
    for (int i = 0; i < 4; ++i) (*best_state)[i] = residual[i] * inv;
  }
  return n2;
}

double hardy_value(const std::vector<double>& t, Vec4* best_state) {
  // t = {thetaA0, thetaA1, thetaB0, thetaB1}, all phi = 0
  const Axis a0{t[0], 0.0}, a1{t[1], 0.0}, b0{t[2], 0.0}, b1{t[3], 0.0};
  const std::vector<Vec4> zeros = {
      product_vec(up_vector(a1), up_vector(b0)),     // P_10(0,0)
      product_vec(up_vector(a0), up_vector(b1)),     // P_01(0,0)
      product_vec(down_vector(a1), down_vector(b1)),  // P_11(1,1)
  };
  const Vec4 target = product_vec(up_vector(a0), up_vector(b0));  // P_00(0,0)
  return constrained_overlap(zeros, target, best_state);
}

}  // namespace

HardyScanResult hardy_probability_scan(int grid_steps, double refine_tol) {
  if (grid_steps < 4) throw std::invalid_argument("hardy_probability_scan: grid_steps must be >= 4");
  std::vector<double> best_t(4, 0.0);
  double best = -1.0;
  std::vector<double> t(4);
  for (int i0 = 0; i0 < grid_steps; ++i0) {
    t[0] = kPi * (i0 + 0.5) / grid_steps;
    for (int i1 = 0; i1 < grid_steps; ++i1) {
      t[1] = kPi * (i1 + 0.5) / grid_steps;
      for (int i2 = 0; i2 < grid_steps; ++i2) {
        t[2] = kPi * (i2 + 0.5) / grid_steps;
        for (int i3 = 0; i3 < grid_steps; ++i3) {
          t[3] = kPi * (i3 + 0.5) / grid_steps;
          const double v = hardy_value(t, nullptr);
          if (v > best) {
            best = v;
            best_t = t;
          }
        }
      }
    }
  }
  auto eval = [](const std::vector<double>& p) { return -hardy_value(p, nullptr); };
  best = -coordinate_descent(best_t, kPi / grid_steps, refine_tol, eval);

  HardyScanResult res;
  res.best_probability = best;
  res.thetas = best_t;
  res.grid_steps = grid_steps;
  Vec4 state_vec{};
  if (hardy_value(best_t, &state_vec) > 1e-24)
    res.state = PureState({state_vec[0], state_vec[1], state_vec[2], state_vec[3]});
  return res;
}

}  // namespace bellgrid
