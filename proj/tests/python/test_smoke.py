import math

import bellgrid as bg


def test_scenario_and_support():
    sc = bg.Scenario(2, 2)
    assert sc.parties == 2 and sc.cell_count == 16
    row = bg.marginal_support(sc, [0, 0], [0, 0])
    assert row == [[0, 0], [0, 1], [0, 2], [0, 3]]


def test_marginalize_uniform():
    sc = bg.Scenario(2, 2)
    ms = bg.marginalize_all(bg.UnderlyingDist.uniform(sc))
    assert math.isclose(ms.prob([0, 0], [0, 0]), 0.25)
    assert math.isclose(bg.evaluate(bg.hardy_form(0, 0, 0, 0, 0, 0), ms), 0.5)


def test_certificates():
    assert bg.certify(bg.hardy_form(0, 0, 0, 0, 0, 0))["proven"]
    forms = bg.catalog_hardy()
    assert len(forms) == 64
    assert len(bg.catalog_chsh()) == 8
    assert bg.certify(bg.zukowski_form())["proven"]
    assert bg.certify(bg.three_axes_form())["proven"]
    assert bg.n_party_hardy(2) == bg.hardy_form(0, 0, 0, 0, 0, 0)


def test_hardy_deduce():
    sc = bg.Scenario(2, 2)
    zeros = [([1, 0], [0, 0]), ([0, 1], [0, 0]), ([1, 1], [1, 1])]
    assert bg.hardy_deduce(sc, zeros, [0, 0], [0, 0])
    assert not bg.hardy_deduce(sc, zeros[:1], [0, 0], [0, 0])


def test_quantum_and_membership():
    sc = bg.Scenario(2, 2)
    pi = math.pi
    # (party, setting) order: A0, B0, A1, B1
    axes = [(0.0, 0.0), (pi / 4, 0.0), (pi / 2, 0.0), (3 * pi / 4, 0.0)]
    ms = bg.born_marginals(bg.PureState.singlet(), sc, axes)
    lower = bg.chsh_form([0, 1])[1]
    assert math.isclose(bg.evaluate(lower, ms), 2 - 2 * math.sqrt(2), abs_tol=1e-9)
    assert not bg.membership(ms)["feasible"]
    assert not bg.check_factorization(ms)["holds"]

    classical = bg.marginalize_all(bg.UnderlyingDist.uniform(sc))
    assert bg.membership(classical)["feasible"]


def test_ghz_and_render():
    rep = bg.ghz_check()
    assert math.isclose(rep["lhs"], -4.0, abs_tol=1e-9)
    text = bg.render_form(bg.hardy_form(0, 0, 0, 0, 0, 0), ascii=True)
    assert "[target]" in text
    svg = bg.render_form(bg.hardy_form(0, 0, 0, 0, 0, 0), format="svg")
    assert svg.startswith("<svg")


def test_json_round_trip():
    form = bg.hardy_form(0, 0, 0, 0, 0, 0)
    assert bg.form_from_json(form.to_json()) == form
    sc = bg.Scenario(2, 2)
    ms = bg.marginalize_all(bg.UnderlyingDist.uniform(sc))
    back = bg.marginal_set_from_json(ms.to_json())
    assert math.isclose(back.prob([1, 1], [1, 0]), 0.25)
