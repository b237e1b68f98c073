#include <doctest.h>

#include <algorithm>
#include <set>

#include "bellgrid/scenario.hpp"

using namespace bellgrid;

TEST_CASE("encode_cell maps assignments to grid coordinates") {
  const Scenario sc(2, 2);
  // bits in (party, setting) order: A0, B0, A1, B1
  CHECK(encode_cell(sc, OutcomeAssignment{{1, 0, 0, 1}}) == GridIndex{{1, 2}});
  CHECK(encode_cell(sc, OutcomeAssignment{{0, 0, 0, 0}}) == GridIndex{{0, 0}});

  const Scenario sc3(3, 2);
  CHECK(encode_cell(sc3, OutcomeAssignment{{1, 1, 1, 0, 0, 0}}) == GridIndex{{7, 0}});
}

TEST_CASE("decode_cell extracts assignment bits") {
  const Scenario sc(2, 2);
  CHECK(decode_cell(sc, GridIndex{{3, 0}}).bits == std::vector<std::uint8_t>{1, 1, 0, 0});
  CHECK(decode_cell(sc, GridIndex{{0, 0}}).bits == std::vector<std::uint8_t>{0, 0, 0, 0});

  const Scenario sc23(2, 3);
  CHECK(decode_cell(sc23, GridIndex{{1, 2, 3}}).bits ==
        std::vector<std::uint8_t>{1, 0, 0, 1, 1, 1});
}

TEST_CASE("encode/decode and flat index are bijections") {
  for (const Scenario sc : {Scenario(2, 2), Scenario(3, 2), Scenario(2, 3), Scenario(1, 4),
                            Scenario(4, 2), Scenario(3, 3), Scenario(4, 4)}) {
    for (std::size_t flat = 0; flat < sc.cell_count(); ++flat) {
      const GridIndex g = grid_from_flat(sc, flat);
      CHECK(flat_index(sc, g) == flat);
      const OutcomeAssignment a = decode_cell(sc, g);
      CHECK(encode_cell(sc, a) == g);
    }
  }
}

TEST_CASE("scenario validation") {
  CHECK_THROWS_AS(Scenario(0, 2), std::invalid_argument);
  CHECK_THROWS_AS(Scenario(2, 0), std::invalid_argument);
  const Scenario sc(2, 2);
  CHECK_THROWS(encode_cell(sc, OutcomeAssignment{{1, 0, 0}}));
  CHECK_THROWS(decode_cell(sc, GridIndex{{4, 0}}));
  CHECK_THROWS(validate_settings(sc, SettingVector{{0, 2}}));
  CHECK_THROWS(validate_outcomes(sc, {0, 2}));
}

TEST_CASE("marginal_support picks the consistent cells") {
  const Scenario sc(2, 2);
  auto grids = [&](const SettingVector& s, std::vector<std::uint8_t> o) {
    std::vector<std::vector<int>> out;
    for (const auto& g : marginal_support_grid(sc, s, o)) out.push_back(g.coords);
    return out;
  };
  // horizontal line (row 0), vertical line (column 3), and a ribbon
  CHECK(grids({{0, 0}}, {0, 0}) ==
        std::vector<std::vector<int>>{{0, 0}, {0, 1}, {0, 2}, {0, 3}});
  CHECK(grids({{1, 1}}, {1, 1}) ==
        std::vector<std::vector<int>>{{0, 3}, {1, 3}, {2, 3}, {3, 3}});
  CHECK(grids({{1, 0}}, {0, 0}) ==
        std::vector<std::vector<int>>{{0, 0}, {1, 0}, {0, 2}, {1, 2}});
}

TEST_CASE("supports partition the cell set for each setting vector") {
  for (const Scenario sc : {Scenario(2, 2), Scenario(3, 2), Scenario(2, 3)}) {
    for (std::size_t si = 0; si < sc.setting_vector_count(); ++si) {
      const SettingVector s = setting_vector_from_index(sc, si);
      std::set<std::size_t> seen;
      for (std::size_t oi = 0; oi < sc.outcome_count(); ++oi) {
        const auto cells = marginal_support(sc, s, outcome_from_index(sc, oi));
        CHECK(cells.size() == sc.support_size());
        seen.insert(cells.begin(), cells.end());
      }
      CHECK(seen.size() == sc.cell_count());
    }
  }
}

TEST_CASE("setting vector and outcome index round trips") {
  const Scenario sc(3, 2);
  for (std::size_t si = 0; si < sc.setting_vector_count(); ++si)
    CHECK(setting_vector_index(sc, setting_vector_from_index(sc, si)) == si);
  for (std::size_t oi = 0; oi < sc.outcome_count(); ++oi)
    CHECK(outcome_index(sc, outcome_from_index(sc, oi)) == oi);
}
