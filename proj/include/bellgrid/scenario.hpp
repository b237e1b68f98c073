#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace bellgrid {

/// A measurement scenario: n parties, m settings per party, binary outcomes.
/// Party-to-bit convention is fixed: Alice = bit 0, Bob = bit 1, Chris = bit 2.
class Scenario {
 public:
  Scenario(int parties, int settings);

  int parties() const { return parties_; }
  int settings() const { return settings_; }

  /// Number of hidden-variable cells, 2^(n*m).
  std::size_t cell_count() const { return std::size_t{1} << (parties_ * settings_); }

  /// Axis size of the V-grid per setting index, 2^n.
  int axis_size() const { return 1 << parties_; }

  /// Number of setting vectors, m^n.
  std::size_t setting_vector_count() const;

  /// Number of outcome tuples per table, 2^n.
  std::size_t outcome_count() const { return std::size_t{1} << parties_; }

  /// Cells in one marginal support, 2^(n*(m-1)).
  std::size_t support_size() const { return std::size_t{1} << (parties_ * (settings_ - 1)); }

  bool operator==(const Scenario& o) const {
    return parties_ == o.parties_ && settings_ == o.settings_;
  }
  bool operator!=(const Scenario& o) const { return !(*this == o); }

 private:
  int parties_;
  int settings_;
};

/// One bit per (party, setting) pair; entry for party p, setting k lives at
/// index k*n + p. Sign convention: projection s = (-1)^bit.
struct OutcomeAssignment {
  std::vector<std::uint8_t> bits;

  std::uint8_t at(const Scenario& sc, int party, int setting) const {
    return bits[static_cast<std::size_t>(setting) * sc.parties() + party];
  }
};

/// Grid coordinates of a hidden-variable cell: coords[k] = sum_p A_{p,k} 2^p.
struct GridIndex {
  std::vector<int> coords;

  bool operator==(const GridIndex& o) const { return coords == o.coords; }
};

/// One setting index per party, s[p] in [0, m).
struct SettingVector {
  std::vector<int> s;

  bool operator==(const SettingVector& o) const { return s == o.s; }
};

GridIndex encode_cell(const Scenario& sc, const OutcomeAssignment& a);
OutcomeAssignment decode_cell(const Scenario& sc, const GridIndex& g);

/// Mixed-radix flat index with coords[0] least significant, radix 2^n.
std::size_t flat_index(const Scenario& sc, const GridIndex& g);
GridIndex grid_from_flat(const Scenario& sc, std::size_t flat);

void validate_settings(const Scenario& sc, const SettingVector& s);
void validate_outcomes(const Scenario& sc, const std::vector<std::uint8_t>& o);

/// Flat index of a setting vector, s[0] least significant, radix m.
std::size_t setting_vector_index(const Scenario& sc, const SettingVector& s);
SettingVector setting_vector_from_index(const Scenario& sc, std::size_t idx);

/// Flat outcome-tuple index: party p contributes bit p.
std::size_t outcome_index(const Scenario& sc, const std::vector<std::uint8_t>& o);
std::vector<std::uint8_t> outcome_from_index(const Scenario& sc, std::size_t idx);

/// All cells consistent with outcome o at settings s: exactly the lambda with
/// A_{p,s[p]} = o[p] for every party. Returned sorted by flat index.
std::vector<std::size_t> marginal_support(const Scenario& sc, const SettingVector& s,
                                          const std::vector<std::uint8_t>& o);

std::vector<GridIndex> marginal_support_grid(const Scenario& sc, const SettingVector& s,
                                             const std::vector<std::uint8_t>& o);

}  // namespace bellgrid
