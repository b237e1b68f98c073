#include "bellgrid/inequality.hpp"

#include <algorithm>
#include <stdexcept>

namespace bellgrid {

namespace {

std::pair<std::size_t, std::size_t> term_key(const Scenario& sc, const MarginalTerm& t) {
  return {setting_vector_index(sc, t.settings), outcome_index(sc, t.outcomes)};
}

MarginalTerm make_term(std::vector<int> settings, std::vector<int> outcomes, Rational coef) {
  MarginalTerm t;
  t.settings.s = std::move(settings);
  t.outcomes.assign(outcomes.begin(), outcomes.end());
  t.coef = std::move(coef);
  return t;
}

}  // namespace

LinearForm::LinearForm(Scenario sc, Rational constant, std::vector<MarginalTerm> terms)
    : scen_(sc), constant_(std::move(constant)) {
  for (const auto& t : terms) {
    validate_settings(scen_, t.settings);
    validate_outcomes(scen_, t.outcomes);
  }
  std::stable_sort(terms.begin(), terms.end(), [&](const auto& a, const auto& b) {
    return term_key(scen_, a) < term_key(scen_, b);
  });
  for (auto& t : terms) {
    if (!terms_.empty() && term_key(scen_, terms_.back()) == term_key(scen_, t))
      terms_.back().coef += t.coef;
    else
      terms_.push_back(std::move(t));
  }
  std::erase_if(terms_, [](const MarginalTerm& t) { return t.coef == 0; });
}

LinearForm LinearForm::scaled(const Rational& factor) const {
  auto terms = terms_;
  for (auto& t : terms) t.coef *= factor;
  return LinearForm(scen_, Rational(constant_ * factor), std::move(terms));
}

LinearForm LinearForm::plus(const LinearForm& other) const {
  if (scen_ != other.scen_) throw std::invalid_argument("LinearForm::plus: scenario mismatch");
  auto terms = terms_;
  terms.insert(terms.end(), other.terms_.begin(), other.terms_.end());
  return LinearForm(scen_, Rational(constant_ + other.constant_), std::move(terms));
}

bool LinearForm::operator==(const LinearForm& o) const {
  if (scen_ != o.scen_ || constant_ != o.constant_ || terms_.size() != o.terms_.size())
    return false;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (term_key(scen_, terms_[i]) != term_key(scen_, o.terms_[i]) ||
        terms_[i].coef != o.terms_[i].coef)
      return false;
  }
  return true;
}

CellCoefficients expand(const LinearForm& form) {
  const Scenario& sc = form.scenario();
  CellCoefficients cc;
  cc.scenario = sc;
  cc.coef.assign(sc.cell_count(), form.constant());
  for (const auto& t : form.terms())
    for (std::size_t cell : marginal_support(sc, t.settings, t.outcomes))
      cc.coef[cell] += t.coef;
  return cc;
}

Certificate certify(const LinearForm& form) {
  CellCoefficients cc = expand(form);
  for (std::size_t cell = 0; cell < cc.coef.size(); ++cell) {
    if (cc.coef[cell] < 0) {
      return Certificate{form, std::move(cc), false, cell,
                         UnderlyingDist::point_mass(form.scenario(), cell)};
    }
  }
  return Certificate{form, std::move(cc), true, std::nullopt, std::nullopt};
}

Value evaluate(const LinearForm& form, const MarginalSet& ms) {
  if (form.scenario() != ms.scenario)
    throw std::invalid_argument("evaluate: scenario mismatch");
  if (ms.tables.size() != ms.scenario.setting_vector_count())
    throw std::invalid_argument("evaluate: incomplete marginal set");
  Value v{form.constant()};
  for (const auto& t : form.terms())
    v += Value(t.coef) * ms.table(t.settings).prob(t.outcomes);
  return v;
}

Value correlation(const MarginalTable& table) {
  const Scenario& sc = table.scenario;
  Value c = table.mode() == Mode::Exact ? Value(Rational(0)) : Value(0.0);
  for (std::size_t oi = 0; oi < sc.outcome_count(); ++oi) {
    const int parity = __builtin_popcountll(oi) & 1;
    c += parity ? -table.probs[oi] : table.probs[oi];
  }
  return c;
}

std::vector<MarginalTerm> correlation_terms(const Scenario& sc, const SettingVector& s,
                                            const Rational& coef) {
  validate_settings(sc, s);
  std::vector<MarginalTerm> terms;
  for (std::size_t oi = 0; oi < sc.outcome_count(); ++oi) {
    MarginalTerm t;
    t.settings = s;
    t.outcomes = outcome_from_index(sc, oi);
    t.coef = (__builtin_popcountll(oi) & 1) ? Rational(-coef) : coef;
    terms.push_back(std::move(t));
  }
  return terms;
}

bool hardy_deduce(const Scenario& sc, const std::vector<MarginalTerm>& zeros,
                  const MarginalTerm& target) {
  std::vector<char> covered(sc.cell_count(), 0);
  for (const auto& z : zeros)
    for (std::size_t cell : marginal_support(sc, z.settings, z.outcomes)) covered[cell] = 1;
  for (std::size_t cell : marginal_support(sc, target.settings, target.outcomes))
    if (!covered[cell]) return false;
  return true;
}

LinearForm hardy_form(int a, int b, int A, int B, int Ap, int Bp) {
  const Scenario sc(2, 2);
  std::vector<MarginalTerm> terms;
  terms.push_back(make_term({1 - a, b}, {Ap, B}, 1));
  terms.push_back(make_term({a, 1 - b}, {A, Bp}, 1));
  terms.push_back(make_term({1 - a, 1 - b}, {1 - Ap, 1 - Bp}, 1));
  terms.push_back(make_term({a, b}, {A, B}, -1));
  return LinearForm(sc, 0, std::move(terms));
}

std::vector<LinearForm> catalog_hardy() {
  std::vector<LinearForm> forms;
  forms.reserve(64);
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int A = 0; A < 2; ++A)
        for (int B = 0; B < 2; ++B)
          for (int Ap = 0; Ap < 2; ++Ap)
            for (int Bp = 0; Bp < 2; ++Bp) forms.push_back(hardy_form(a, b, A, B, Ap, Bp));
  return forms;
}

std::pair<LinearForm, LinearForm> chsh_form(const SettingVector& leg) {
  const Scenario sc(2, 2);
  validate_settings(sc, leg);
  std::vector<MarginalTerm> plus_t, minus_t;
  for (std::size_t si = 0; si < sc.setting_vector_count(); ++si) {
    const SettingVector s = setting_vector_from_index(sc, si);
    const Rational sign = (s == leg) ? Rational(-1) : Rational(1);
    for (auto& t : correlation_terms(sc, s, sign)) plus_t.push_back(t);
    for (auto& t : correlation_terms(sc, s, Rational(-sign))) minus_t.push_back(t);
  }
  // upper branch: 2 - T, lower branch: 2 + T.
  return {LinearForm(sc, 2, std::move(minus_t)), LinearForm(sc, 2, std::move(plus_t))};
}

std::vector<LinearForm> chsh_constituents(const SettingVector& leg, bool upper_branch) {
  const Scenario sc(2, 2);
  validate_settings(sc, leg);
  const int a = leg.s[0], b = leg.s[1];
  std::vector<LinearForm> out;
  // Aligned Hardy forms pair up by target parity: odd targets sum to half of
  // the upper branch, even targets to half of the lower branch.
  const auto targets = upper_branch ? std::vector<std::pair<int, int>>{{0, 1}, {1, 0}}
                                    : std::vector<std::pair<int, int>>{{0, 0}, {1, 1}};
  for (const auto& [A, B] : targets) {
    out.push_back(hardy_form(a, b, A, B, A, B));
    out.push_back(hardy_form(a, b, A, B, A, B));
  }
  return out;
}

std::vector<LinearForm> catalog_chsh() {
  const Scenario sc(2, 2);
  std::vector<LinearForm> out;
  for (std::size_t li = 0; li < sc.setting_vector_count(); ++li) {
    auto [upper, lower] = chsh_form(setting_vector_from_index(sc, li));
    out.push_back(std::move(upper));
    out.push_back(std::move(lower));
  }
  return out;
}

LinearForm n_party_hardy(int n) {
  if (n < 2) throw std::invalid_argument("n_party_hardy: need n >= 2");
  const Scenario sc(n, 2);
  std::vector<MarginalTerm> terms;
  for (int p = 0; p < n; ++p) {
    MarginalTerm t;
    t.settings.s.assign(n, 0);
    t.settings.s[p] = 1;
    t.outcomes.assign(n, 0);
    t.coef = 1;
    terms.push_back(std::move(t));
  }
  MarginalTerm ones;
  ones.settings.s.assign(n, 1);
  ones.outcomes.assign(n, 1);
  ones.coef = 1;
  terms.push_back(std::move(ones));
  MarginalTerm zeros;
  zeros.settings.s.assign(n, 0);
  zeros.outcomes.assign(n, 0);
  zeros.coef = -1;
  terms.push_back(std::move(zeros));
  return LinearForm(sc, 0, std::move(terms));
}

LinearForm zukowski_form() {
  const Scenario sc(3, 2);
  std::vector<MarginalTerm> terms;
  auto add = [&](std::vector<int> s, Rational coef) {
    SettingVector sv{std::move(s)};
    for (auto& t : correlation_terms(sc, sv, coef)) terms.push_back(std::move(t));
  };
  add({1, 1, 1}, 1);
  add({0, 0, 1}, -1);
  add({0, 1, 0}, -1);
  add({1, 0, 0}, -1);
  return LinearForm(sc, 2, std::move(terms));
}

bool zukowski_ghz_corollary() {
  const Scenario sc(3, 2);
  // C_s = 1 forces P_s(o) = 0 on every odd-parity o. The corollary holds iff
  // those zeros cover the support of every odd-parity outcome at (1,1,1).
  std::vector<MarginalTerm> zeros;
  for (auto s : {std::vector<int>{0, 0, 1}, std::vector<int>{0, 1, 0}, std::vector<int>{1, 0, 0}})
    for (std::size_t oi = 0; oi < sc.outcome_count(); ++oi)
      if (__builtin_popcountll(oi) & 1)
        zeros.push_back(make_term(s, {static_cast<int>(oi & 1), static_cast<int>((oi >> 1) & 1),
                                      static_cast<int>((oi >> 2) & 1)},
                                  1));
  for (std::size_t oi = 0; oi < sc.outcome_count(); ++oi) {
    if (!(__builtin_popcountll(oi) & 1)) continue;
    const MarginalTerm target =
        make_term({1, 1, 1}, {static_cast<int>(oi & 1), static_cast<int>((oi >> 1) & 1),
                              static_cast<int>((oi >> 2) & 1)},
                  1);
    if (!hardy_deduce(sc, zeros, target)) return false;
  }
  return true;
}

LinearForm three_axes_form() {
  const Scenario sc(2, 3);
  std::vector<MarginalTerm> terms;
  terms.push_back(make_term({0, 0}, {1, 1}, 1));
  terms.push_back(make_term({1, 0}, {0, 0}, 1));
  terms.push_back(make_term({0, 2}, {0, 0}, 1));
  terms.push_back(make_term({1, 2}, {0, 0}, -1));
  return LinearForm(sc, 0, std::move(terms));
}

LinearForm three_axes_conditional_form() {
  const Scenario sc(2, 3);
  std::vector<MarginalTerm> terms;
  terms.push_back(make_term({1, 0}, {0, 0}, 1));
  terms.push_back(make_term({0, 2}, {0, 0}, 1));
  terms.push_back(make_term({1, 2}, {0, 0}, -1));
  return LinearForm(sc, 0, std::move(terms));
}

CoverSearchResult search_covers(const Scenario& sc, int k, const MarginalTerm& target,
                                std::size_t limit) {
  validate_settings(sc, target.settings);
  validate_outcomes(sc, target.outcomes);
  if (k < 1) throw std::invalid_argument("search_covers: need k >= 1");

  // All candidate (settings, outcomes) terms in lexicographic encoding order,
  // excluding the target itself.
  struct Candidate {
    SettingVector s;
    std::vector<std::uint8_t> o;
    std::vector<std::size_t> support;
  };
  const auto target_key =
      std::pair{setting_vector_index(sc, target.settings), outcome_index(sc, target.outcomes)};
  std::vector<Candidate> cands;
  for (std::size_t si = 0; si < sc.setting_vector_count(); ++si) {
    for (std::size_t oi = 0; oi < sc.outcome_count(); ++oi) {
      if (std::pair{si, oi} == target_key) continue;
      const SettingVector s = setting_vector_from_index(sc, si);
      const auto o = outcome_from_index(sc, oi);
      cands.push_back({s, o, marginal_support(sc, s, o)});
    }
  }

  const std::vector<std::size_t> target_support =
      marginal_support(sc, target.settings, target.outcomes);

  CoverSearchResult res;
  std::vector<std::size_t> pick(k);
  std::vector<int> coverage(sc.cell_count());

  // Iterative k-combination enumeration in lexicographic order.
  for (int i = 0; i < k; ++i) pick[i] = static_cast<std::size_t>(i);
  if (static_cast<std::size_t>(k) > cands.size()) return res;
  while (true) {
    if (res.candidates_examined >= limit) {
      res.truncated = true;
      return res;
    }
    ++res.candidates_examined;
    std::fill(coverage.begin(), coverage.end(), 0);
    for (int i = 0; i < k; ++i)
      for (std::size_t cell : cands[pick[i]].support) coverage[cell] = 1;
    bool ok = true;
    for (std::size_t cell : target_support)
      if (!coverage[cell]) {
        ok = false;
        break;
      }
    if (ok) {
      std::vector<MarginalTerm> terms;
      for (int i = 0; i < k; ++i) {
        MarginalTerm t;
        t.settings = cands[pick[i]].s;
        t.outcomes = cands[pick[i]].o;
        t.coef = 1;
        terms.push_back(std::move(t));
      }
      MarginalTerm neg = target;
      neg.coef = -1;
      terms.push_back(std::move(neg));
      res.proven.emplace_back(sc, 0, std::move(terms));
    }
    // advance combination
    int i = k - 1;
    while (i >= 0 && pick[i] == cands.size() - static_cast<std::size_t>(k - i)) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
  return res;
}

}  // namespace bellgrid
