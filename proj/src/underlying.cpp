#include "bellgrid/underlying.hpp"

#include <cmath>
#include <stdexcept>

namespace bellgrid {

namespace {

Mode common_mode(const std::vector<Value>& vals) {
  if (vals.empty()) throw std::invalid_argument("empty value table");
  const Mode m = vals.front().mode();
  for (const auto& v : vals)
    if (v.mode() != m) throw std::invalid_argument("mixed exact/float values in one table");
  return m;
}

void check_normalized(const std::vector<Value>& vals, Mode mode, double tol,
                      const char* what) {
  Value sum(0);
  for (const auto& v : vals) {
    if (!v.nonnegative(0.0)) throw std::invalid_argument(std::string(what) + ": negative entry");
    sum += v;
  }
  if (mode == Mode::Exact) {
    if (sum.rational() != 1) throw std::invalid_argument(std::string(what) + ": weights must sum to 1");
  } else if (std::abs(sum.to_double() - 1.0) > tol) {
    throw std::invalid_argument(std::string(what) + ": weights must sum to 1 within tolerance");
  }
}

}  // namespace

UnderlyingDist::UnderlyingDist(Scenario sc, std::vector<Value> weights, double tol)
    : scen_(sc), mode_(Mode::Exact), w_(std::move(weights)) {
  if (w_.size() != scen_.cell_count())
    throw std::invalid_argument("UnderlyingDist: need one weight per cell");
  mode_ = common_mode(w_);
  check_normalized(w_, mode_, tol, "UnderlyingDist");
}

UnderlyingDist UnderlyingDist::uniform(const Scenario& sc) {
  std::vector<Value> w(sc.cell_count(), Value(Rational(1, static_cast<long long>(sc.cell_count()))));
  return UnderlyingDist(sc, std::move(w));
}

UnderlyingDist UnderlyingDist::point_mass(const Scenario& sc, std::size_t flat_cell) {
  if (flat_cell >= sc.cell_count()) throw std::out_of_range("point_mass: cell out of range");
  std::vector<Value> w(sc.cell_count(), Value(Rational(0)));
  w[flat_cell] = Value(Rational(1));
  return UnderlyingDist(sc, std::move(w));
}

Mode MarginalTable::mode() const { return common_mode(probs); }

const Value& MarginalTable::prob(const std::vector<std::uint8_t>& o) const {
  return probs.at(outcome_index(scenario, o));
}

void MarginalTable::validate(double tol) const {
  validate_settings(scenario, settings);
  if (probs.size() != scenario.outcome_count())
    throw std::invalid_argument("MarginalTable: need one probability per outcome tuple");
  check_normalized(probs, mode(), tol, "MarginalTable");
}

Mode MarginalSet::mode() const {
  if (tables.empty()) throw std::invalid_argument("MarginalSet: empty");
  return tables.front().mode();
}

const MarginalTable& MarginalSet::table(const SettingVector& s) const {
  return tables.at(setting_vector_index(scenario, s));
}

void MarginalSet::validate(double tol) const {
  if (tables.size() != scenario.setting_vector_count())
    throw std::invalid_argument("MarginalSet: incomplete (need one table per setting vector)");
  for (std::size_t i = 0; i < tables.size(); ++i) {
    if (setting_vector_index(scenario, tables[i].settings) != i)
      throw std::invalid_argument("MarginalSet: tables out of canonical order");
    tables[i].validate(tol);
  }
}

FullHiddenVariableDist::FullHiddenVariableDist(std::vector<Value> weights, double tol)
    : mode_(Mode::Exact), w_(std::move(weights)) {
  if (w_.size() != kCells)
    throw std::invalid_argument("FullHiddenVariableDist: need 256 weights");
  mode_ = common_mode(w_);
  check_normalized(w_, mode_, tol, "FullHiddenVariableDist");
}

MarginalTable marginalize(const UnderlyingDist& rho, const SettingVector& s) {
  const Scenario& sc = rho.scenario();
  validate_settings(sc, s);
  MarginalTable t;
  t.scenario = sc;
  t.settings = s;
  t.probs.assign(sc.outcome_count(), rho.mode() == Mode::Exact ? Value(Rational(0)) : Value(0.0));
  for (std::size_t oi = 0; oi < sc.outcome_count(); ++oi) {
    Value sum = t.probs[oi];
    for (std::size_t cell : marginal_support(sc, s, outcome_from_index(sc, oi)))
      sum += rho.weight(cell);
    t.probs[oi] = sum;
  }
  return t;
}

MarginalSet marginalize_all(const UnderlyingDist& rho) {
  const Scenario& sc = rho.scenario();
  MarginalSet ms;
  ms.scenario = sc;
  ms.tables.reserve(sc.setting_vector_count());
  for (std::size_t si = 0; si < sc.setting_vector_count(); ++si)
    ms.tables.push_back(marginalize(rho, setting_vector_from_index(sc, si)));
  return ms;
}

UnderlyingDist product_dist(const SingleSiteSet& singles, double tol) {
  const Scenario& sc = singles.scenario;
  const std::size_t slots = static_cast<std::size_t>(sc.parties()) * sc.settings();
  if (singles.prob_zero.size() != slots)
    throw std::invalid_argument("product_dist: need one P(0) per (party, setting)");
  for (const auto& p : singles.prob_zero) {
    const Value one_minus = Value(1) - p;
    if (!p.nonnegative(tol) || !one_minus.nonnegative(tol))
      throw std::invalid_argument("product_dist: single-site probabilities out of [0,1]");
  }
  std::vector<Value> w;
  w.reserve(sc.cell_count());
  for (std::size_t flat = 0; flat < sc.cell_count(); ++flat) {
    Value prod(singles.prob_zero.front().mode() == Mode::Exact ? Value(Rational(1)) : Value(1.0));
    for (std::size_t pos = 0; pos < slots; ++pos) {
      const bool bit = ((flat >> pos) & 1u) != 0;
      const Value& p0 = singles.prob_zero[pos];
      prod *= bit ? (Value(1) - p0) : p0;
    }
    w.push_back(prod);
  }
  return UnderlyingDist(sc, std::move(w), tol);
}

FactorizationReport check_factorization(const MarginalSet& ms, double tol) {
  ms.validate(tol);
  const Scenario& sc = ms.scenario;
  const bool exact = ms.mode() == Mode::Exact;
  FactorizationReport rep;
  const std::size_t nsv = sc.setting_vector_count();
  const std::size_t nout = sc.outcome_count();
  const int n = sc.parties();
  for (std::size_t si = 0; si < nsv; ++si) {
    for (std::size_t ti = si; ti < nsv; ++ti) {
      const SettingVector s = setting_vector_from_index(sc, si);
      const SettingVector t = setting_vector_from_index(sc, ti);
      for (std::size_t oi = 0; oi < nout; ++oi) {
        for (std::size_t oj = 0; oj < nout; ++oj) {
          const auto o = outcome_from_index(sc, oi);
          const auto op = outcome_from_index(sc, oj);
          const Value lhs = ms.tables[si].probs[oi] * ms.tables[ti].probs[oj];
          // Swap (setting, outcome) of each party in a nonempty proper subset.
          for (unsigned mask = 1; mask + 1 < (1u << n); ++mask) {
            SettingVector sw = s, tw = t;
            auto ow = o, opw = op;
            for (int p = 0; p < n; ++p) {
              if ((mask >> p) & 1u) {
                std::swap(sw.s[p], tw.s[p]);
                std::swap(ow[p], opw[p]);
              }
            }
            const Value rhs = ms.table(sw).prob(ow) * ms.table(tw).prob(opw);
            ++rep.instances_checked;
            const Value diff = lhs - rhs;
            const double resid = std::abs(diff.to_double());
            rep.max_residual = std::max(rep.max_residual, resid);
            const bool violated = exact ? !diff.is_zero() : resid > tol;
            if (violated) {
              std::vector<int> parties;
              for (int p = 0; p < n; ++p)
                if ((mask >> p) & 1u) parties.push_back(p);
              rep.violations.push_back({s, t, o, op, parties, resid});
            }
          }
        }
      }
    }
  }
  return rep;
}

namespace {

constexpr int kFullScenarioParties = 2;
constexpr int kFullScenarioSettings = 2;

// Bit of A (bit_b = false) or B (bit_b = true) for axes pair (a, b) in the
// 8-bit byte index.
int byte_bit(int a, int b, bool bit_b) { return 2 * (a + 2 * b) + (bit_b ? 1 : 0); }

// Extracts the reduced half-byte cell from a locality-consistent byte.
std::size_t reduced_cell(std::size_t byte) {
  const int a0 = static_cast<int>((byte >> byte_bit(0, 0, false)) & 1u);
  const int b0 = static_cast<int>((byte >> byte_bit(0, 0, true)) & 1u);
  const int a1 = static_cast<int>((byte >> byte_bit(1, 0, false)) & 1u);
  const int b1 = static_cast<int>((byte >> byte_bit(0, 1, true)) & 1u);
  return static_cast<std::size_t>(a0 | (b0 << 1) | (a1 << 2) | (b1 << 3));
}

bool locality_consistent(std::size_t byte) {
  auto bit = [&](int a, int b, bool isb) { return (byte >> byte_bit(a, b, isb)) & 1u; };
  return bit(0, 0, false) == bit(0, 1, false) && bit(1, 0, false) == bit(1, 1, false) &&
         bit(0, 0, true) == bit(1, 0, true) && bit(0, 1, true) == bit(1, 1, true);
}

void require_2x2(const Scenario& sc, const char* what) {
  if (sc.parties() != kFullScenarioParties || sc.settings() != kFullScenarioSettings)
    throw std::invalid_argument(std::string(what) + ": requires the 2-party 2-setting scenario");
}

}  // namespace

FullHiddenVariableDist embed_local(const UnderlyingDist& rho) {
  require_2x2(rho.scenario(), "embed_local");
  const Value zero = rho.mode() == Mode::Exact ? Value(Rational(0)) : Value(0.0);
  std::vector<Value> w(FullHiddenVariableDist::kCells, zero);
  for (std::size_t byte = 0; byte < FullHiddenVariableDist::kCells; ++byte)
    if (locality_consistent(byte)) w[byte] = rho.weight(reduced_cell(byte));
  return FullHiddenVariableDist(std::move(w));
}

LocalReduction reduce_local(const FullHiddenVariableDist& w, double tol) {
  const Scenario sc(kFullScenarioParties, kFullScenarioSettings);
  const bool exact = w.mode() == Mode::Exact;
  Value off = exact ? Value(Rational(0)) : Value(0.0);
  std::vector<Value> rho(sc.cell_count(), exact ? Value(Rational(0)) : Value(0.0));
  for (std::size_t byte = 0; byte < FullHiddenVariableDist::kCells; ++byte) {
    if (locality_consistent(byte))
      rho[reduced_cell(byte)] += w.weights()[byte];
    else
      off += w.weights()[byte];
  }
  LocalReduction red;
  red.off_subspace_mass = off;
  red.local = exact ? off.is_zero() : off.to_double() <= tol;
  if (red.local) red.rho = UnderlyingDist(sc, std::move(rho), tol);
  return red;
}

MarginalSet full_marginals(const FullHiddenVariableDist& w) {
  const Scenario sc(kFullScenarioParties, kFullScenarioSettings);
  const bool exact = w.mode() == Mode::Exact;
  MarginalSet ms;
  ms.scenario = sc;
  for (std::size_t si = 0; si < sc.setting_vector_count(); ++si) {
    const SettingVector s = setting_vector_from_index(sc, si);
    MarginalTable t;
    t.scenario = sc;
    t.settings = s;
    t.probs.assign(sc.outcome_count(), exact ? Value(Rational(0)) : Value(0.0));
    const int a = s.s[0], b = s.s[1];
    for (std::size_t byte = 0; byte < FullHiddenVariableDist::kCells; ++byte) {
      const std::size_t A = (byte >> byte_bit(a, b, false)) & 1u;
      const std::size_t B = (byte >> byte_bit(a, b, true)) & 1u;
      t.probs[A | (B << 1)] += w.weights()[byte];
    }
    ms.tables.push_back(std::move(t));
  }
  return ms;
}

}  // namespace bellgrid
