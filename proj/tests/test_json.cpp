#include <doctest.h>

#include <random>

#include "bellgrid/json_io.hpp"

using namespace bellgrid;

TEST_CASE("scenario and rational round trips") {
  const Scenario sc(3, 2);
  CHECK(scenario_from_json(to_json(sc)) == sc);

  for (const Rational r : {Rational(1, 3), Rational(-7, 2), Rational(0)})
    CHECK(rational_from_json(to_json(r)) == r);

  // values past int64 serialize as decimal strings
  const Rational big(BigInt(1) << 80, (BigInt(1) << 80) + 1);
  const Json j = to_json(big);
  CHECK(j.at("num").is_string());
  CHECK(rational_from_json(j) == big);

  CHECK_THROWS(rational_from_json(Json{{"num", 1}, {"den", 0}}));
}

TEST_CASE("value mode survives serialization") {
  const Value exact(Rational(2, 7));
  const Value back = value_from_json(to_json(exact));
  CHECK(back.is_exact());
  CHECK(back.rational() == Rational(2, 7));

  const Value f(0.125);
  const Value fback = value_from_json(to_json(f));
  CHECK(!fback.is_exact());
  CHECK(fback.to_double() == 0.125);
}

TEST_CASE("underlying distribution round trips, omitting zero cells") {
  const Scenario sc(2, 2);
  const UnderlyingDist pm = UnderlyingDist::point_mass(sc, 5);
  const Json j = to_json(pm);
  CHECK(j.at("weights").size() == 1);
  CHECK(j.at("mode") == "rational");
  const UnderlyingDist back = underlying_from_json(j);
  for (std::size_t cell = 0; cell < sc.cell_count(); ++cell)
    CHECK(back.weight(cell).rational() == pm.weight(cell).rational());

  std::vector<Value> w(16, Value(1.0 / 16.0));
  const UnderlyingDist f(sc, std::move(w));
  const UnderlyingDist fback = underlying_from_json(to_json(f));
  CHECK(fback.mode() == Mode::Float);
  CHECK(fback.weight(3).to_double() == doctest::Approx(1.0 / 16.0));
}

TEST_CASE("marginal set round trips exactly") {
  std::mt19937 rng(17);
  std::uniform_int_distribution<int> d(0, 99);
  const Scenario sc(2, 2);
  std::vector<int> raw(sc.cell_count());
  int total = 0;
  for (auto& x : raw) total += (x = d(rng) + 1);
  std::vector<Value> w;
  for (int x : raw) w.emplace_back(Rational(x, total));
  const MarginalSet ms = marginalize_all(UnderlyingDist(sc, std::move(w)));

  const MarginalSet back = marginal_set_from_json(to_json(ms));
  for (std::size_t si = 0; si < ms.tables.size(); ++si)
    for (std::size_t oi = 0; oi < ms.tables[si].probs.size(); ++oi)
      CHECK(back.tables[si].probs[oi].rational() == ms.tables[si].probs[oi].rational());

  Json broken = to_json(ms);
  broken["tables"].erase(0);
  CHECK_THROWS(marginal_set_from_json(broken));
}

TEST_CASE("linear form and certificate serialization") {
  const LinearForm form = hardy_form(0, 0, 0, 0, 0, 0);
  CHECK(form_from_json(to_json(form)) == form);

  const Json cj = to_json(certify(form));
  CHECK(cj.at("verdict") == "proven");
  CHECK(cj.at("cells").size() == 16);

  const Json chsh = to_json(catalog_chsh()[0]);
  CHECK(form_from_json(chsh) == catalog_chsh()[0]);
}

TEST_CASE("axes and states round trip") {
  const Scenario sc(2, 2);
  AxisChoice axes;
  axes.scenario = sc;
  axes.axes = {{0.1, 0.2}, {0.3, 0.4}, {0.5, 0.6}, {0.7, 0.8}};
  const AxisChoice back = axes_from_json(to_json(axes), sc);
  REQUIRE(back.axes.size() == 4);
  for (std::size_t i = 0; i < 4; ++i) {
    CHECK(back.axes[i].theta == doctest::Approx(axes.axes[i].theta));
    CHECK(back.axes[i].phi == doctest::Approx(axes.axes[i].phi));
  }

  const PureState s = PureState::singlet();
  const PureState sback = state_from_json(to_json(s));
  for (std::size_t i = 0; i < 4; ++i) {
    CHECK(sback.amplitudes()[i].real() == doctest::Approx(s.amplitudes()[i].real()));
    CHECK(sback.amplitudes()[i].imag() == doctest::Approx(s.amplitudes()[i].imag()));
  }
}
