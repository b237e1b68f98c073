#include "bellgrid/json_io.hpp"

#include <limits>
#include <stdexcept>

namespace bellgrid {

namespace {

Json bigint_to_json(const BigInt& v) {
  static const BigInt lo(std::numeric_limits<std::int64_t>::min());
  static const BigInt hi(std::numeric_limits<std::int64_t>::max());
  if (v >= lo && v <= hi) return v.convert_to<std::int64_t>();
  return v.str();
}

BigInt bigint_from_json(const Json& j) {
  if (j.is_string()) return BigInt(j.get<std::string>());
  return BigInt(j.get<std::int64_t>());
}

std::string outcome_key(const Scenario& sc, std::size_t oi) {
  std::string key;
  for (int p = 0; p < sc.parties(); ++p) key += static_cast<char>('0' + ((oi >> p) & 1));
  return key;
}

std::vector<std::uint8_t> outcomes_from_key(const std::string& key) {
  std::vector<std::uint8_t> o;
  for (char c : key) {
    if (c != '0' && c != '1') throw std::invalid_argument("bad outcome bitstring: " + key);
    o.push_back(static_cast<std::uint8_t>(c - '0'));
  }
  return o;
}

}  // namespace

Json to_json(const Scenario& sc) {
  return Json{{"parties", sc.parties()}, {"settings", sc.settings()}};
}

Scenario scenario_from_json(const Json& j) {
  return Scenario(j.at("parties").get<int>(), j.at("settings").get<int>());
}

Json to_json(const Rational& r) {
  return Json{{"num", bigint_to_json(numerator(r))}, {"den", bigint_to_json(denominator(r))}};
}

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  const BigInt den = bigint_from_json(j.at("den"));
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  return Rational(bigint_from_json(j.at("num")), den);
}

Json to_json(const Value& v) {
  if (v.is_exact()) return to_json(v.rational());
  return v.to_double();
}

Value value_from_json(const Json& j) {
  if (j.is_object() || j.is_number_integer()) return Value(rational_from_json(j));
  return Value(j.get<double>());
}

Json to_json(const UnderlyingDist& rho) {
  const Scenario& sc = rho.scenario();
  Json weights = Json::array();
  for (std::size_t flat = 0; flat < sc.cell_count(); ++flat) {
    const Value& w = rho.weight(flat);
    if (w.is_zero()) continue;  // omitted cells mean weight 0
    Json entry;
    entry["cell"] = grid_from_flat(sc, flat).coords;
    if (w.is_exact()) {
      entry["num"] = bigint_to_json(numerator(w.rational()));
      entry["den"] = bigint_to_json(denominator(w.rational()));
    } else {
      entry["value"] = w.to_double();
    }
    weights.push_back(std::move(entry));
  }
  return Json{{"scenario", to_json(sc)},
              {"mode", rho.mode() == Mode::Exact ? "rational" : "float"},
              {"weights", std::move(weights)}};
}

UnderlyingDist underlying_from_json(const Json& j) {
  const Scenario sc = scenario_from_json(j.at("scenario"));
  const std::string mode = j.at("mode").get<std::string>();
  const bool exact = mode == "rational";
  if (!exact && mode != "float") throw std::invalid_argument("mode must be rational or float");
  std::vector<Value> w(sc.cell_count(), exact ? Value(Rational(0)) : Value(0.0));
  for (const auto& entry : j.at("weights")) {
    GridIndex g{entry.at("cell").get<std::vector<int>>()};
    if (exact)
      w[flat_index(sc, g)] = Value(Rational(bigint_from_json(entry.at("num")),
                                            bigint_from_json(entry.at("den"))));
    else
      w[flat_index(sc, g)] = Value(entry.at("value").get<double>());
  }
  return UnderlyingDist(sc, std::move(w));
}

Json to_json(const MarginalSet& ms) {
  Json tables = Json::array();
  for (const auto& t : ms.tables) {
    Json probs = Json::object();
    for (std::size_t oi = 0; oi < ms.scenario.outcome_count(); ++oi)
      probs[outcome_key(ms.scenario, oi)] = to_json(t.probs[oi]);
    tables.push_back(Json{{"settings", t.settings.s}, {"probs", std::move(probs)}});
  }
  return Json{{"scenario", to_json(ms.scenario)}, {"tables", std::move(tables)}};
}

MarginalSet marginal_set_from_json(const Json& j) {
  const Scenario sc = scenario_from_json(j.at("scenario"));
  MarginalSet ms;
  ms.scenario = sc;
  ms.tables.resize(sc.setting_vector_count());
  std::vector<bool> seen(sc.setting_vector_count(), false);
  for (const auto& tj : j.at("tables")) {
    MarginalTable t;
    t.scenario = sc;
    t.settings = SettingVector{tj.at("settings").get<std::vector<int>>()};
    t.probs.assign(sc.outcome_count(), Value(0.0));
    std::size_t filled = 0;
    for (const auto& [key, val] : tj.at("probs").items()) {
      const auto o = outcomes_from_key(key);
      t.probs[outcome_index(sc, o)] = value_from_json(val);
      ++filled;
    }
    if (filled != sc.outcome_count())
      throw std::invalid_argument("marginal table missing outcome entries");
    const std::size_t idx = setting_vector_index(sc, t.settings);
    seen[idx] = true;
    ms.tables[idx] = std::move(t);
  }
  for (bool s : seen)
    if (!s) throw std::invalid_argument("marginal set missing a settings table");
  ms.validate();
  return ms;
}

Json to_json(const LinearForm& form) {
  Json terms = Json::array();
  for (const auto& t : form.terms()) {
    terms.push_back(Json{{"settings", t.settings.s},
                         {"outcomes", std::vector<int>(t.outcomes.begin(), t.outcomes.end())},
                         {"coef", to_json(t.coef)}});
  }
  return Json{{"scenario", to_json(form.scenario())},
              {"constant", to_json(form.constant())},
              {"terms", std::move(terms)}};
}

LinearForm form_from_json(const Json& j) {
  const Scenario sc = scenario_from_json(j.at("scenario"));
  std::vector<MarginalTerm> terms;
  for (const auto& tj : j.at("terms")) {
    MarginalTerm t;
    t.settings = SettingVector{tj.at("settings").get<std::vector<int>>()};
    const auto o = tj.at("outcomes").get<std::vector<int>>();
    for (int b : o) t.outcomes.push_back(static_cast<std::uint8_t>(b));
    t.coef = rational_from_json(tj.at("coef"));
    terms.push_back(std::move(t));
  }
  const Rational constant =
      j.contains("constant") ? rational_from_json(j.at("constant")) : Rational(0);
  return LinearForm(sc, constant, std::move(terms));
}

Json to_json(const Certificate& cert) {
  Json cells = Json::array();
  for (const auto& c : cert.cells.coef) cells.push_back(to_json(c));
  Json j{{"form", to_json(cert.form)},
         {"verdict", cert.proven ? "proven" : "refuted"},
         {"cells", std::move(cells)}};
  if (cert.witness_cell) {
    j["witness_cell"] = grid_from_flat(cert.form.scenario(), *cert.witness_cell).coords;
    j["counterexample"] = to_json(*cert.counterexample);
  }
  return j;
}

Json to_json(const MembershipResult& res) {
  Json j{{"verdict", res.feasible ? "feasible" : "infeasible"},
         {"max_residual", res.max_residual}};
  if (res.witness) j["witness"] = to_json(*res.witness);
  return j;
}

Json to_json(const AxisChoice& axes) {
  const Scenario& sc = axes.scenario;
  Json parties = Json::array();
  for (int p = 0; p < sc.parties(); ++p) {
    Json per_setting = Json::array();
    for (int k = 0; k < sc.settings(); ++k) {
      const Axis& ax = axes.axis(p, k);
      per_setting.push_back(Json{{"theta", ax.theta}, {"phi", ax.phi}});
    }
    parties.push_back(std::move(per_setting));
  }
  return Json{{"axes", std::move(parties)}};
}

AxisChoice axes_from_json(const Json& j, const Scenario& sc) {
  AxisChoice axes;
  axes.scenario = sc;
  axes.axes.resize(static_cast<std::size_t>(sc.parties()) * sc.settings());
  const auto& parties = j.at("axes");
  if (parties.size() != static_cast<std::size_t>(sc.parties()))
    throw std::invalid_argument("axes: need one entry per party");
  for (int p = 0; p < sc.parties(); ++p) {
    const auto& per_setting = parties.at(p);
    if (per_setting.size() != static_cast<std::size_t>(sc.settings()))
      throw std::invalid_argument("axes: need one axis per setting");
    for (int k = 0; k < sc.settings(); ++k) {
      const auto& aj = per_setting.at(k);
      axes.axes[static_cast<std::size_t>(k) * sc.parties() + p] = {
          aj.at("theta").get<double>(), aj.at("phi").get<double>()};
    }
  }
  axes.validate();
  return axes;
}

Json to_json(const PureState& state) {
  Json amps = Json::array();
  for (const auto& a : state.amplitudes()) amps.push_back(Json::array({a.real(), a.imag()}));
  return amps;
}

PureState state_from_json(const Json& j) {
  std::vector<Amplitude> amp;
  for (const auto& e : j) amp.emplace_back(e.at(0).get<double>(), e.at(1).get<double>());
  return PureState(std::move(amp));
}

}  // namespace bellgrid
