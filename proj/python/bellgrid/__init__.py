"""Marginal/underlying-probability toolkit.

Grid encodings of hidden-variable cells, exact cell-cover certificates for
Bell-type inequalities, Born-rule evaluation, and local-polytope membership.
"""

from ._bellgrid import (
    LinearForm,
    MarginalSet,
    PureState,
    Scenario,
    UnderlyingDist,
    born_marginals,
    catalog_chsh,
    catalog_hardy,
    certify,
    check_factorization,
    chsh_form,
    evaluate,
    form_from_json,
    ghz_check,
    hardy_deduce,
    hardy_form,
    hardy_probability_scan,
    marginal_set_from_json,
    marginal_support,
    marginalize_all,
    membership,
    n_party_hardy,
    render_form,
    run_acceptance,
    three_axes_form,
    violation_scan,
    zukowski_form,
)

__all__ = [
    "LinearForm",
    "MarginalSet",
    "PureState",
    "Scenario",
    "UnderlyingDist",
    "born_marginals",
    "catalog_chsh",
    "catalog_hardy",
    "certify",
    "check_factorization",
    "chsh_form",
    "evaluate",
    "form_from_json",
    "ghz_check",
    "hardy_deduce",
    "hardy_form",
    "hardy_probability_scan",
    "marginal_set_from_json",
    "marginal_support",
    "marginalize_all",
    "membership",
    "n_party_hardy",
    "render_form",
    "run_acceptance",
    "three_axes_form",
    "violation_scan",
    "zukowski_form",
]
