#include <doctest.h>

#include <random>

#include "bellgrid/inequality.hpp"
#include "bellgrid/polytope.hpp"
#include "bellgrid/quantum.hpp"
#include "bellgrid/underlying.hpp"

using namespace bellgrid;

namespace {

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

MarginalSet singlet_chsh_marginals() {
  const Scenario sc(2, 2);
  AxisChoice axes;
  axes.scenario = sc;
  const double pi = 3.14159265358979323846;
  axes.axes = {{0.0, 0.0}, {pi / 4, 0.0}, {pi / 2, 0.0}, {3 * pi / 4, 0.0}};
  return born_marginals(PureState::singlet(), axes);
}

}  // namespace

TEST_CASE("feasibility problem shape") {
  const Scenario sc(2, 2);
  const FeasibilityProblem fp =
      build_feasibility_problem(marginalize_all(UnderlyingDist::uniform(sc)));
  CHECK(fp.variables == 16);
  CHECK(fp.supports.size() == 17);  // 4 tables x 4 outcomes + normalization
  for (std::size_t row = 0; row + 1 < fp.supports.size(); ++row)
    CHECK(fp.supports[row].size() == sc.support_size());
  CHECK(fp.supports.back().size() == 16);
}

TEST_CASE("classically generated marginal sets are members") {
  const Scenario sc(2, 2);
  const MembershipResult uniform =
      membership(marginalize_all(UnderlyingDist::uniform(sc)));
  CHECK(uniform.feasible);
  CHECK(uniform.max_residual == 0.0);

  std::mt19937 rng(1234);
  for (int trial = 0; trial < 10; ++trial) {
    const UnderlyingDist rho = random_rational(sc, rng);
    const MarginalSet ms = marginalize_all(rho);
    const MembershipResult res = membership(ms);
    REQUIRE(res.feasible);
    REQUIRE(res.witness);
    // the witness reproduces the marginals exactly in rational mode
    const MarginalSet again = marginalize_all(*res.witness);
    for (std::size_t si = 0; si < ms.tables.size(); ++si)
      for (std::size_t oi = 0; oi < ms.tables[si].probs.size(); ++oi)
        CHECK(again.tables[si].probs[oi].rational() == ms.tables[si].probs[oi].rational());
  }
}

TEST_CASE("membership scales to the larger scenarios") {
  std::mt19937 rng(55);
  for (const Scenario sc : {Scenario(3, 2), Scenario(2, 3)}) {
    const MarginalSet ms = marginalize_all(random_rational(sc, rng));
    CHECK(membership(ms).feasible);
  }
}

TEST_CASE("entangled marginals beyond the correlation bound are rejected") {
  const MarginalSet ms = singlet_chsh_marginals();
  const MembershipResult res = membership(ms, 1e-8);
  CHECK(!res.feasible);

  const CrossValidationReport rep = cross_validate(ms, catalog_chsh(), 1e-8);
  CHECK(!rep.membership_feasible);
  CHECK(!rep.all_forms_nonnegative);
  CHECK(!rep.soundness_violation);
  CHECK(!rep.catalog_gap);
}

TEST_CASE("membership is strictly weaker than factorization") {
  // A correlated-but-classical distribution: marginals admit an underlying
  // model yet fail the cross-factorization identities.
  const Scenario sc(2, 2);
  std::vector<Value> w(16, Value(Rational(0)));
  w[flat_index(sc, GridIndex{{0, 0}})] = Value(Rational(1, 2));
  w[flat_index(sc, GridIndex{{3, 3}})] = Value(Rational(1, 2));
  const MarginalSet ms = marginalize_all(UnderlyingDist(sc, std::move(w)));
  CHECK(membership(ms).feasible);
  CHECK(!check_factorization(ms).holds());
}

TEST_CASE("membership is deterministic") {
  std::mt19937 rng(808);
  const MarginalSet ms = marginalize_all(random_rational(Scenario(2, 2), rng));
  const MembershipResult a = membership(ms), b = membership(ms);
  REQUIRE(a.feasible);
  REQUIRE(b.feasible);
  for (std::size_t cell = 0; cell < 16; ++cell)
    CHECK(a.witness->weight(cell).rational() == b.witness->weight(cell).rational());
}

TEST_CASE("float-mode membership with tolerance") {
  // uniform marginals in float mode
  const Scenario sc(2, 2);
  MarginalSet ms;
  ms.scenario = sc;
  for (std::size_t si = 0; si < sc.setting_vector_count(); ++si) {
    MarginalTable t;
    t.scenario = sc;
    t.settings = setting_vector_from_index(sc, si);
    t.probs.assign(4, Value(0.25));
    ms.tables.push_back(std::move(t));
  }
  const MembershipResult res = membership(ms, 1e-8);
  CHECK(res.feasible);
  CHECK(res.max_residual < 1e-8);
}
