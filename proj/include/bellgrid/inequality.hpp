#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bellgrid/scenario.hpp"
#include "bellgrid/underlying.hpp"
#include "bellgrid/value.hpp"

namespace bellgrid {

/// One signed marginal-probability summand: coef * P_s(o).
struct MarginalTerm {
  SettingVector settings;
  std::vector<std::uint8_t> outcomes;
  Rational coef;
};

/// Signed rational combination of marginal terms plus a constant. Terms are
/// kept canonical: sorted by (settings, outcomes), merged, zero terms removed.
class LinearForm {
 public:
  LinearForm(Scenario sc, Rational constant, std::vector<MarginalTerm> terms);

  const Scenario& scenario() const { return scen_; }
  const Rational& constant() const { return constant_; }
  const std::vector<MarginalTerm>& terms() const { return terms_; }

  LinearForm scaled(const Rational& factor) const;
  LinearForm plus(const LinearForm& other) const;

  bool operator==(const LinearForm& o) const;

 private:
  Scenario scen_;
  Rational constant_;
  std::vector<MarginalTerm> terms_;
};

/// Expansion of a form onto rho-cells, indexed by flat cell index.
struct CellCoefficients {
  Scenario scenario{1, 1};
  std::vector<Rational> coef;

  bool operator==(const CellCoefficients& o) const {
    return scenario == o.scenario && coef == o.coef;
  }
};

/// Exact nonnegativity certificate. Proven iff every cell coefficient >= 0;
/// otherwise carries a witness cell and the point-mass counterexample there.
struct Certificate {
  LinearForm form;
  CellCoefficients cells;
  bool proven;
  std::optional<std::size_t> witness_cell;
  std::optional<UnderlyingDist> counterexample;
};

CellCoefficients expand(const LinearForm& form);
Certificate certify(const LinearForm& form);
Value evaluate(const LinearForm& form, const MarginalSet& ms);

/// Correlation C_s = sum_o (-1)^parity(o) P_s(o).
Value correlation(const MarginalTable& table);

/// The marginal terms of coef * C_s lowered via the correlation definition.
std::vector<MarginalTerm> correlation_terms(const Scenario& sc, const SettingVector& s,
                                            const Rational& coef);

/// True iff support(target) is covered by the union of the zero supports, so
/// that vanishing of the zeros forces the target marginal to vanish.
bool hardy_deduce(const Scenario& sc, const std::vector<MarginalTerm>& zeros,
                  const MarginalTerm& target);

/// The one-parameter-per-bit Hardy family on n=2, m=2: for leg (a,b), target
/// outcomes (A,B) and ribbon outcomes (A',B'),
///   P_{!a,b}(A',B) + P_{a,!b}(A,B') + P_{!a,!b}(!A',!B') - P_{ab}(A,B) >= 0.
/// All 64 parameter choices give distinct proven forms.
LinearForm hardy_form(int a, int b, int A, int B, int Ap, int Bp);
std::vector<LinearForm> catalog_hardy();

/// Both branches of the CHSH inequality for the given leg (the correlation
/// carrying the minus sign): constant 2 plus the lowered correlation terms.
/// first = 2 - T, second = 2 + T with T = sum of the three plus-legs minus
/// the leg correlation.
std::pair<LinearForm, LinearForm> chsh_form(const SettingVector& leg);

/// The four same-leg Hardy forms whose expansions sum to the branch (two
/// distinct forms, each contributing twice).
std::vector<LinearForm> chsh_constituents(const SettingVector& leg, bool upper_branch);

/// All 8 CHSH branch forms (4 legs x 2 signs), canonical order.
std::vector<LinearForm> catalog_chsh();

/// n one-hot terms + the all-ones term - the all-zeros term (m=2).
LinearForm n_party_hardy(int n);

/// Three-party correlation bound C_111 - C_001 - C_010 - C_100 >= -2,
/// lowered to marginals with constant 2.
LinearForm zukowski_form();

/// Deduction at the correlation level: if C_001 = C_010 = C_100 = 1 then the
/// bound forces C_111 = 1. Returns true when the forced value is certified.
bool zukowski_ghz_corollary();

/// Two-party three-axes inequality P_00(1,1)+P_10(0,0)+P_02(0,0)-P_12(0,0)>=0.
LinearForm three_axes_form();

/// The conditional single-zero corollary of the three-axes inequality:
/// P_10(0,0)+P_02(0,0)-P_12(0,0), valid whenever P_00(1,1)=0.
LinearForm three_axes_conditional_form();

struct CoverSearchResult {
  std::vector<LinearForm> proven;
  bool truncated = false;              // candidate limit hit
  std::size_t candidates_examined = 0;
};

/// Enumerates forms with k unit-coefficient positive marginal terms and -1 on
/// the target term, in lexicographic term order, keeping those that certify.
CoverSearchResult search_covers(const Scenario& sc, int k, const MarginalTerm& target,
                                std::size_t limit);

}  // namespace bellgrid
