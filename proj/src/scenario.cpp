#include "bellgrid/scenario.hpp"

#include <stdexcept>
#include <string>

namespace bellgrid {

Scenario::Scenario(int parties, int settings) : parties_(parties), settings_(settings) {
  if (parties < 1) throw std::invalid_argument("Scenario: parties must be >= 1");
  if (settings < 1) throw std::invalid_argument("Scenario: settings must be >= 1");
  if (parties * settings > 24)
    throw std::invalid_argument("Scenario: cell space 2^(n*m) too large");
}

std::size_t Scenario::setting_vector_count() const {
  std::size_t c = 1;
  for (int p = 0; p < parties_; ++p) c *= static_cast<std::size_t>(settings_);
  return c;
}

GridIndex encode_cell(const Scenario& sc, const OutcomeAssignment& a) {
  const auto need = static_cast<std::size_t>(sc.parties()) * sc.settings();
  if (a.bits.size() != need)
    throw std::invalid_argument("encode_cell: assignment has " + std::to_string(a.bits.size()) +
                                " bits, expected " + std::to_string(need));
  GridIndex g;
  g.coords.resize(sc.settings());
  for (int k = 0; k < sc.settings(); ++k) {
    int coord = 0;
    for (int p = 0; p < sc.parties(); ++p) {
      const std::uint8_t bit = a.at(sc, p, k);
      if (bit > 1) throw std::invalid_argument("encode_cell: outcome bits must be 0 or 1");
      coord |= static_cast<int>(bit) << p;
    }
    g.coords[k] = coord;
  }
  return g;
}

OutcomeAssignment decode_cell(const Scenario& sc, const GridIndex& g) {
  if (g.coords.size() != static_cast<std::size_t>(sc.settings()))
    throw std::invalid_argument("decode_cell: wrong number of grid coordinates");
  OutcomeAssignment a;
  a.bits.resize(static_cast<std::size_t>(sc.parties()) * sc.settings());
  for (int k = 0; k < sc.settings(); ++k) {
    const int coord = g.coords[k];
    if (coord < 0 || coord >= sc.axis_size())
      throw std::out_of_range("decode_cell: grid coordinate out of range");
    for (int p = 0; p < sc.parties(); ++p)
      a.bits[static_cast<std::size_t>(k) * sc.parties() + p] =
          static_cast<std::uint8_t>((coord >> p) & 1);
  }
  return a;
}

std::size_t flat_index(const Scenario& sc, const GridIndex& g) {
  if (g.coords.size() != static_cast<std::size_t>(sc.settings()))
    throw std::invalid_argument("flat_index: wrong number of grid coordinates");
  std::size_t flat = 0;
  for (int k = sc.settings() - 1; k >= 0; --k) {
    const int coord = g.coords[k];
    if (coord < 0 || coord >= sc.axis_size())
      throw std::out_of_range("flat_index: grid coordinate out of range");
    flat = flat * sc.axis_size() + static_cast<std::size_t>(coord);
  }
  return flat;
}

GridIndex grid_from_flat(const Scenario& sc, std::size_t flat) {
  if (flat >= sc.cell_count()) throw std::out_of_range("grid_from_flat: index out of range");
  GridIndex g;
  g.coords.resize(sc.settings());
  for (int k = 0; k < sc.settings(); ++k) {
    g.coords[k] = static_cast<int>(flat % sc.axis_size());
    flat /= sc.axis_size();
  }
  return g;
}

void validate_settings(const Scenario& sc, const SettingVector& s) {
  if (s.s.size() != static_cast<std::size_t>(sc.parties()))
    throw std::invalid_argument("setting vector length must equal number of parties");
  for (int v : s.s)
    if (v < 0 || v >= sc.settings())
      throw std::out_of_range("setting index out of range");
}

void validate_outcomes(const Scenario& sc, const std::vector<std::uint8_t>& o) {
  if (o.size() != static_cast<std::size_t>(sc.parties()))
    throw std::invalid_argument("outcome tuple length must equal number of parties");
  for (auto b : o)
    if (b > 1) throw std::out_of_range("outcomes must be 0 or 1");
}

std::size_t setting_vector_index(const Scenario& sc, const SettingVector& s) {
  validate_settings(sc, s);
  std::size_t idx = 0;
  for (int p = sc.parties() - 1; p >= 0; --p)
    idx = idx * sc.settings() + static_cast<std::size_t>(s.s[p]);
  return idx;
}

SettingVector setting_vector_from_index(const Scenario& sc, std::size_t idx) {
  SettingVector s;
  s.s.resize(sc.parties());
  for (int p = 0; p < sc.parties(); ++p) {
    s.s[p] = static_cast<int>(idx % sc.settings());
    idx /= sc.settings();
  }
  return s;
}

std::size_t outcome_index(const Scenario& sc, const std::vector<std::uint8_t>& o) {
  validate_outcomes(sc, o);
  std::size_t idx = 0;
  for (int p = 0; p < sc.parties(); ++p) idx |= static_cast<std::size_t>(o[p]) << p;
  return idx;
}

std::vector<std::uint8_t> outcome_from_index(const Scenario& sc, std::size_t idx) {
  std::vector<std::uint8_t> o(sc.parties());
  for (int p = 0; p < sc.parties(); ++p) o[p] = static_cast<std::uint8_t>((idx >> p) & 1);
  return o;
}

std::vector<std::size_t> marginal_support(const Scenario& sc, const SettingVector& s,
                                          const std::vector<std::uint8_t>& o) {
  validate_settings(sc, s);
  validate_outcomes(sc, o);
  std::vector<std::size_t> cells;
  cells.reserve(sc.support_size());
  // The constrained bit positions in the flat cell index are s[p]*n + p.
  const int n = sc.parties();
  for (std::size_t flat = 0; flat < sc.cell_count(); ++flat) {
    bool match = true;
    for (int p = 0; p < n && match; ++p) {
      const int pos = s.s[p] * n + p;
      match = (((flat >> pos) & 1u) == o[p]);
    }
    if (match) cells.push_back(flat);
  }
  return cells;
}

std::vector<GridIndex> marginal_support_grid(const Scenario& sc, const SettingVector& s,
                                             const std::vector<std::uint8_t>& o) {
  std::vector<GridIndex> out;
  for (std::size_t flat : marginal_support(sc, s, o)) out.push_back(grid_from_flat(sc, flat));
  return out;
}

}  // namespace bellgrid
