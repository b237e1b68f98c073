#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "bellgrid/inequality.hpp"
#include "bellgrid/underlying.hpp"

using namespace bellgrid;

namespace {

MarginalTerm term(std::vector<int> s, std::vector<int> o, Rational coef = 1) {
  MarginalTerm t;
  t.settings = SettingVector{std::move(s)};
  for (int b : o) t.outcomes.push_back(static_cast<std::uint8_t>(b));
  t.coef = std::move(coef);
  return t;
}

// P_10(0,0) + P_01(0,0) + P_11(1,1) - P_00(0,0)
LinearForm hardy_base() { return hardy_form(0, 0, 0, 0, 0, 0); }

UnderlyingDist random_rational(const Scenario& sc, std::mt19937& rng) {
  std::uniform_int_distribution<int> d(0, 99);
  std::vector<int> raw(sc.cell_count());
  int total = 0;
  for (auto& x : raw) total += (x = d(rng));
  if (total == 0) raw[0] = total = 1;
  std::vector<Value> w;
  for (int x : raw) w.emplace_back(Rational(x, total));
  return UnderlyingDist(sc, std::move(w));
}

}  // namespace

TEST_CASE("expand spreads term coefficients over supports") {
  const Scenario sc(2, 2);
  const LinearForm cover(sc, 0,
                         {term({1, 0}, {0, 0}), term({0, 1}, {0, 0}), term({1, 1}, {1, 1})});
  const CellCoefficients cc = expand(cover);
  const std::set<std::pair<int, int>> ones = {{0, 1}, {0, 2}, {0, 3}, {1, 0}, {1, 2},
                                              {1, 3}, {2, 0}, {2, 1}, {2, 3}, {3, 3}};
  for (std::size_t flat = 0; flat < sc.cell_count(); ++flat) {
    const GridIndex g = grid_from_flat(sc, flat);
    Rational expect(0);
    if (g == GridIndex{{0, 0}}) expect = 2;
    else if (ones.count({g.coords[0], g.coords[1]})) expect = 1;
    CHECK(cc.coef[flat] == expect);
  }

  const CellCoefficients all_one = expand(LinearForm(sc, 1, {}));
  for (const auto& c : all_one.coef) CHECK(c == 1);

  const CellCoefficients zero =
      expand(LinearForm(sc, 0, {term({0, 0}, {0, 0}), term({0, 0}, {0, 0}, -1)}));
  for (const auto& c : zero.coef) CHECK(c == 0);
}

TEST_CASE("expand is linear") {
  const Scenario sc(2, 2);
  std::mt19937 rng(31);
  std::uniform_int_distribution<int> coef(-3, 3), si(0, 3), oi(0, 3);
  for (int trial = 0; trial < 25; ++trial) {
    auto random_form = [&] {
      std::vector<MarginalTerm> terms;
      for (int i = 0; i < 3; ++i) {
        MarginalTerm t = term({si(rng) & 1, si(rng) & 1}, {oi(rng) & 1, oi(rng) & 1});
        t.coef = coef(rng);
        terms.push_back(std::move(t));
      }
      return LinearForm(sc, coef(rng), std::move(terms));
    };
    const LinearForm f = random_form(), g = random_form();
    const Rational a(coef(rng)), b(coef(rng));
    const CellCoefficients lhs = expand(f.scaled(a).plus(g.scaled(b)));
    const CellCoefficients fa = expand(f), gb = expand(g);
    for (std::size_t cell = 0; cell < lhs.coef.size(); ++cell)
      CHECK(lhs.coef[cell] == a * fa.coef[cell] + b * gb.coef[cell]);
  }
}

TEST_CASE("certify: proven, refuted with counterexample, vacuous") {
  const Certificate good = certify(hardy_base());
  CHECK(good.proven);
  CHECK(!good.witness_cell);

  const Scenario sc(2, 2);
  const Certificate bad =
      certify(LinearForm(sc, 0, {term({0, 0}, {0, 0}), term({1, 1}, {0, 0}, -1)}));
  CHECK(!bad.proven);
  REQUIRE(bad.witness_cell);
  REQUIRE(bad.counterexample);
  CHECK(evaluate(bad.form, marginalize_all(*bad.counterexample)).rational() < 0);

  CHECK(certify(LinearForm(sc, 0, {})).proven);
}

TEST_CASE("evaluate substitutes marginals") {
  const Scenario sc(2, 2);
  const MarginalSet uniform = marginalize_all(UnderlyingDist::uniform(sc));
  CHECK(evaluate(hardy_base(), uniform).rational() == Rational(1, 2));
  CHECK(evaluate(chsh_form({{0, 0}}).first, uniform).rational() == 2);
  CHECK(evaluate(chsh_form({{0, 0}}).second, uniform).rational() == 2);
}

TEST_CASE("proven forms are nonnegative on every classical distribution") {
  const Scenario sc(2, 2);
  std::mt19937 rng(77);
  std::vector<LinearForm> forms = {hardy_base(), chsh_form({{1, 0}}).first,
                                   chsh_form({{0, 1}}).second};
  for (int trial = 0; trial < 50; ++trial) {
    const MarginalSet ms = marginalize_all(random_rational(sc, rng));
    for (const auto& f : forms) CHECK(evaluate(f, ms).rational() >= 0);
  }
}

TEST_CASE("correlation of a table") {
  const Scenario sc(2, 2);
  MarginalTable t;
  t.scenario = sc;
  t.settings = {{0, 0}};
  t.probs.assign(4, Value(Rational(1, 4)));
  CHECK(correlation(t).rational() == 0);

  t.probs = {Value(Rational(1)), Value(Rational(0)), Value(Rational(0)), Value(Rational(0))};
  CHECK(correlation(t).rational() == 1);

  // P(0,1) = P(1,0) = 1/2; outcome index is A + 2B
  t.probs = {Value(Rational(0)), Value(Rational(1, 2)), Value(Rational(1, 2)),
             Value(Rational(0))};
  CHECK(correlation(t).rational() == -1);
}

TEST_CASE("hardy_deduce checks support covers") {
  const Scenario sc(2, 2);
  const std::vector<MarginalTerm> zeros = {term({1, 0}, {0, 0}), term({0, 1}, {0, 0}),
                                           term({1, 1}, {1, 1})};
  CHECK(hardy_deduce(sc, zeros, term({0, 0}, {0, 0})));
  CHECK(!hardy_deduce(sc, {term({1, 0}, {0, 0})}, term({0, 0}, {0, 0})));

  const Scenario sc3(3, 2);
  const std::vector<MarginalTerm> zeros3 = {
      term({1, 0, 0}, {0, 0, 0}), term({0, 1, 0}, {0, 0, 0}), term({0, 0, 1}, {0, 0, 0}),
      term({1, 1, 1}, {1, 1, 1})};
  CHECK(hardy_deduce(sc3, zeros3, term({0, 0, 0}, {0, 0, 0})));
}

TEST_CASE("the 64-form family is distinct and proven") {
  const auto forms = catalog_hardy();
  REQUIRE(forms.size() == 64);
  for (std::size_t i = 0; i < forms.size(); ++i)
    for (std::size_t j = i + 1; j < forms.size(); ++j) CHECK(!(forms[i] == forms[j]));
  for (const auto& f : forms) CHECK(certify(f).proven);

  auto contains = [&](const LinearForm& f) {
    return std::any_of(forms.begin(), forms.end(), [&](const LinearForm& g) { return f == g; });
  };
  CHECK(contains(hardy_base()));
  // the outcome-flipped block: P_10(1,1)+P_01(1,1)+P_11(0,0)-P_00(1,1) and friends
  CHECK(contains(LinearForm(Scenario(2, 2), 0,
                            {term({1, 0}, {1, 1}), term({0, 1}, {1, 1}), term({1, 1}, {0, 0}),
                             term({0, 0}, {1, 1}, -1)})));
}

TEST_CASE("CHSH branches decompose into same-leg constituents") {
  const auto all = catalog_chsh();
  CHECK(all.size() == 8);
  for (const auto& f : all) CHECK(certify(f).proven);

  for (std::size_t li = 0; li < 4; ++li) {
    const SettingVector leg{{static_cast<int>(li & 1), static_cast<int>(li >> 1)}};
    const auto [upper, lower] = chsh_form(leg);
    for (bool is_upper : {true, false}) {
      const LinearForm& branch = is_upper ? upper : lower;
      const auto parts = chsh_constituents(leg, is_upper);
      REQUIRE(parts.size() == 4);
      CellCoefficients sum = expand(parts[0]);
      for (std::size_t i = 1; i < parts.size(); ++i) {
        const CellCoefficients cc = expand(parts[i]);
        for (std::size_t cell = 0; cell < sum.coef.size(); ++cell)
          sum.coef[cell] += cc.coef[cell];
      }
      CHECK(sum == expand(branch));
    }
  }
}

TEST_CASE("n-party one-hot covers") {
  CHECK(n_party_hardy(2) == hardy_base());
  for (int n = 3; n <= 5; ++n) CHECK(certify(n_party_hardy(n)).proven);
}

TEST_CASE("three-party correlation bound and its forced-correlation corollary") {
  const LinearForm z = zukowski_form();
  CHECK(certify(z).proven);
  CHECK(evaluate(z, marginalize_all(UnderlyingDist::uniform(Scenario(3, 2)))).rational() == 2);
  CHECK(zukowski_ghz_corollary());
}

TEST_CASE("two-party three-setting bound") {
  const LinearForm f = three_axes_form();
  CHECK(certify(f).proven);
  CHECK(evaluate(f, marginalize_all(UnderlyingDist::uniform(Scenario(2, 3)))).rational() ==
        Rational(1, 2));
  CHECK(certify(three_axes_conditional_form()).proven == false);
}

TEST_CASE("search_covers enumerates proven cover forms") {
  const Scenario sc(2, 2);
  const CoverSearchResult r3 = search_covers(sc, 3, term({0, 0}, {0, 0}), 1'000'000);
  CHECK(!r3.truncated);
  CHECK(std::any_of(r3.proven.begin(), r3.proven.end(),
                    [&](const LinearForm& f) { return f == hardy_base(); }));
  for (const auto& f : r3.proven) CHECK(certify(f).proven);

  const CoverSearchResult r1 = search_covers(sc, 1, term({0, 0}, {0, 0}), 1'000'000);
  CHECK(!r1.truncated);
  CHECK(r1.proven.empty());

  const CoverSearchResult tiny = search_covers(sc, 3, term({0, 0}, {0, 0}), 10);
  CHECK(tiny.truncated);
  CHECK(tiny.candidates_examined == 10);

  const Scenario sc3(3, 2);
  const CoverSearchResult r4 = search_covers(sc3, 4, term({0, 0, 0}, {0, 0, 0}), 700'000);
  CHECK(!r4.truncated);
  CHECK(std::any_of(r4.proven.begin(), r4.proven.end(),
                    [&](const LinearForm& f) { return f == n_party_hardy(3); }));
}
