#include "bellgrid/polytope.hpp"

#include <cmath>
#include <stdexcept>

namespace bellgrid {

namespace {

// Dense phase-1 simplex: minimize the artificial-variable sum subject to
// A x = b, x >= 0, b >= 0. Bland's rule throughout, so termination and
// determinism are guaranteed. T is Rational (eps = 0) or double.
template <typename T>
struct Phase1Simplex {
  std::size_t rows, nvars;  // structural variables
  std::vector<std::vector<T>> tab;  // rows x (nvars + rows + 1): [A | I | b]
  std::vector<T> cost;              // reduced-cost row, size nvars + rows + 1
  std::vector<std::size_t> basis;   // basic variable per row
  T eps;

  Phase1Simplex(const std::vector<std::vector<T>>& a, const std::vector<T>& b, T eps_)
      : rows(a.size()), nvars(a.empty() ? 0 : a.front().size()), eps(eps_) {
    const std::size_t cols = nvars + rows + 1;
    tab.assign(rows, std::vector<T>(cols, T(0)));
    for (std::size_t r = 0; r < rows; ++r) {
      for (std::size_t c = 0; c < nvars; ++c) tab[r][c] = a[r][c];
      tab[r][nvars + r] = T(1);
      tab[r][cols - 1] = b[r];
      basis.push_back(nvars + r);
    }
    // cost = sum of artificial rows, negated into reduced-cost form
    cost.assign(cols, T(0));
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < cols; ++c) cost[c] -= tab[r][c];
    for (std::size_t r = 0; r < rows; ++r) cost[nvars + r] = T(0);
  }

  void pivot(std::size_t pr, std::size_t pc) {
    const std::size_t cols = tab[pr].size();
    const T inv = T(1) / tab[pr][pc];
    for (std::size_t c = 0; c < cols; ++c) tab[pr][c] *= inv;
    tab[pr][pc] = T(1);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == pr) continue;
      const T f = tab[r][pc];
      if (f == T(0)) continue;
      for (std::size_t c = 0; c < cols; ++c) tab[r][c] -= f * tab[pr][c];
      tab[r][pc] = T(0);
    }
    const T fc = cost[pc];
    if (fc != T(0)) {
      for (std::size_t c = 0; c < cols; ++c) cost[c] -= fc * tab[pr][c];
      cost[pc] = T(0);
    }
    basis[pr] = pc;
  }

  // Returns the phase-1 objective value (sum of leftover artificials).
  T solve() {
    const std::size_t cols = nvars + rows + 1;
    while (true) {
      // Bland: entering = lowest-index column with negative reduced cost.
      std::size_t pc = cols;
      for (std::size_t c = 0; c + 1 < cols; ++c) {
        if (cost[c] < -eps) {
          pc = c;
          break;
        }
      }
      if (pc == cols) break;
      // Bland: leaving = min-ratio row, ties by lowest basic variable index.
      std::size_t pr = rows;
      for (std::size_t r = 0; r < rows; ++r) {
        if (!(tab[r][pc] > eps)) continue;
        if (pr == rows) {
          pr = r;
          continue;
        }
        const T lhs = tab[r][cols - 1] * tab[pr][pc];
        const T rhs = tab[pr][cols - 1] * tab[r][pc];
        if (lhs < rhs || (lhs == rhs && basis[r] < basis[pr])) pr = r;
      }
      if (pr == rows) break;  // unbounded below cannot happen for phase 1
      pivot(pr, pc);
    }
    T obj(0);
    for (std::size_t r = 0; r < rows; ++r)
      if (basis[r] >= nvars) obj += tab[r][cols - 1];
    return obj;
  }

  std::vector<T> solution() const {
    std::vector<T> x(nvars, T(0));
    for (std::size_t r = 0; r < rows; ++r)
      if (basis[r] < nvars) x[basis[r]] = tab[r][nvars + rows];
    return x;
  }
};

template <typename T>
std::pair<bool, std::vector<T>> solve_feasibility(const std::vector<std::vector<T>>& a,
                                                  const std::vector<T>& b, T eps, T feas_tol) {
  Phase1Simplex<T> s(a, b, eps);
  const T obj = s.solve();
  if (obj > feas_tol) return {false, {}};
  return {true, s.solution()};
}

}  // namespace

FeasibilityProblem build_feasibility_problem(const MarginalSet& ms) {
  ms.validate();
  const Scenario& sc = ms.scenario;
  FeasibilityProblem fp;
  fp.scenario = sc;
  fp.variables = sc.cell_count();
  for (std::size_t si = 0; si < sc.setting_vector_count(); ++si) {
    const SettingVector s = setting_vector_from_index(sc, si);
    for (std::size_t oi = 0; oi < sc.outcome_count(); ++oi) {
      fp.supports.push_back(marginal_support(sc, s, outcome_from_index(sc, oi)));
      fp.rhs.push_back(ms.tables[si].probs[oi]);
    }
  }
  // normalization row: redundant with each table's rows, kept deliberately
  std::vector<std::size_t> all(fp.variables);
  for (std::size_t i = 0; i < fp.variables; ++i) all[i] = i;
  fp.supports.push_back(std::move(all));
  fp.rhs.push_back(ms.mode() == Mode::Exact ? Value(Rational(1)) : Value(1.0));
  return fp;
}

MembershipResult membership(const MarginalSet& ms, double tol) {
  const FeasibilityProblem fp = build_feasibility_problem(ms);
  const std::size_t rows = fp.supports.size();
  MembershipResult res;

  if (ms.mode() == Mode::Exact) {
    std::vector<std::vector<Rational>> a(rows, std::vector<Rational>(fp.variables, 0));
    std::vector<Rational> b(rows);
    for (std::size_t r = 0; r < rows; ++r) {
      for (std::size_t c : fp.supports[r]) a[r][c] = 1;
      b[r] = fp.rhs[r].rational();
    }
    auto [feasible, x] = solve_feasibility<Rational>(a, b, Rational(0), Rational(0));
    res.feasible = feasible;
    if (feasible) {
      std::vector<Value> w(x.begin(), x.end());
      res.witness = UnderlyingDist(fp.scenario, std::move(w));
      res.max_residual = 0.0;
    }
    return res;
  }

  std::vector<std::vector<double>> a(rows, std::vector<double>(fp.variables, 0.0));
  std::vector<double> b(rows);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c : fp.supports[r]) a[r][c] = 1.0;
    const double v = fp.rhs[r].to_double();
    if (v < -tol) throw std::invalid_argument("membership: negative marginal probability");
    b[r] = std::max(v, 0.0);
  }
  auto [feasible, x] = solve_feasibility<double>(a, b, 1e-12, tol);
  res.feasible = feasible;
  if (feasible) {
    double resid = 0.0;
    for (std::size_t r = 0; r < rows; ++r) {
      double sum = 0.0;
      for (std::size_t c : fp.supports[r]) sum += x[c];
      resid = std::max(resid, std::abs(sum - b[r]));
    }
    for (auto& xi : x) xi = std::max(xi, 0.0);
    std::vector<Value> w(x.begin(), x.end());
    res.witness = UnderlyingDist(fp.scenario, std::move(w), std::max(tol, resid) * 10 + 1e-12);
    res.max_residual = resid;
  }
  return res;
}

CrossValidationReport cross_validate(const MarginalSet& ms, const std::vector<LinearForm>& forms,
                                     double tol) {
  CrossValidationReport rep;
  rep.membership_feasible = membership(ms, tol).feasible;
  const bool exact = ms.mode() == Mode::Exact;
  for (const auto& f : forms) {
    const Value v = evaluate(f, ms);
    const bool nonneg = exact ? v.nonnegative() : v.to_double() >= -tol;
    if (!nonneg) rep.all_forms_nonnegative = false;
    rep.form_values.push_back(v);
  }
  rep.soundness_violation = rep.membership_feasible && !rep.all_forms_nonnegative;
  rep.catalog_gap = !rep.membership_feasible && rep.all_forms_nonnegative;
  return rep;
}

}  // namespace bellgrid
