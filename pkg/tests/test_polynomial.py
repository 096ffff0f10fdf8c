import random
from fractions import Fraction

import pytest

from metricmat.errors import InputError
from metricmat.matroid import dual, incidence_matroid
from metricmat.corpus import banana_graph, cycle_graph
from metricmat.polynomial import (
    MultilinearPoly,
    cremona_identity_check,
    factor_by_components,
    product,
    psi_deletion_contraction,
    psi_from_bases,
)

DIAMOND = {("e1", "e3"), ("e1", "e4"), ("e2", "e3"), ("e2", "e4"),
           ("e1", "e5"), ("e2", "e5"), ("e3", "e5"), ("e4", "e5")}


def supports(p):
    return {tuple(t["support"]) for t in p.to_json()["terms"]}


def test_diamond_terms(cor):
    a = psi_from_bases(cor["diamond"])
    b = psi_deletion_contraction(cor["diamond"])
    assert supports(a) == DIAMOND
    assert a.to_json() == b.to_json()
    assert all(t["coeff"] == "1" for t in a.to_json()["terms"])


def test_routes_agree(cor):
    for name, m in cor.items():
        assert psi_from_bases(m).terms == psi_deletion_contraction(m).terms, name


def test_cycle_is_linear():
    m = incidence_matroid(cycle_graph(6))
    psi = psi_from_bases(m)
    assert psi.degree == 1 and len(psi.terms) == 6


def test_banana_is_elementary_symmetric():
    psi = psi_from_bases(incidence_matroid(banana_graph(5)))
    assert psi.degree == 4
    assert sorted(bin(k).count("1") for k in psi.terms) == [4] * 5


def test_tree_is_one(cor):
    assert psi_from_bases(cor["path3"]).terms == {0: 1}
    assert psi_from_bases(cor["U11x3"]).terms == {0: 1}


def test_factorisation(cor):
    m = cor["diamond+C2"]
    parts = factor_by_components(m)
    assert len(parts) == 2
    assert product(parts, psi_from_bases(m).vars).terms == psi_from_bases(m).terms


def test_split_and_derivative(cor):
    psi = psi_from_bases(cor["diamond"])
    g1, g0 = psi.split("e5")
    assert g1.var_count == 4 and g1.degree == 1 and g0.degree == 2
    pt = [2, 3, 5, 7, 11]
    assert psi.evaluate(pt) == 11 * g1.evaluate(pt[:4]) + g0.evaluate(pt[:4])
    assert psi.derivative("e5").evaluate(pt) == g1.evaluate(pt[:4])


def test_evaluate_modulus(cor):
    psi = psi_from_bases(cor["K4"])
    pt = [3, 1, 4, 1, 5, 9]
    assert psi.evaluate(pt, 7) == psi.evaluate(pt) % 7


@pytest.mark.parametrize("name", ["C2", "C3", "diamond", "K4", "banana10", "diamond+C2"])
def test_cremona(cor, name):
    m = cor[name]
    rng = random.Random(name)
    for _ in range(10):
        pt = [Fraction(rng.choice([-1, 1]) * rng.randint(1, 20), rng.randint(1, 5)) for _ in m.ground]
        assert cremona_identity_check(m, pt)
        assert cremona_identity_check(m, [rng.randint(1, 6) for _ in m.ground], 7)


def test_cremona_negative_control(cor):
    # the dual of a different matroid on the same ground must fail somewhere
    m = cor["diamond"]
    wrong = dual(cor["diamond"]).relabel(["e2", "e1", "e3", "e5", "e4"])
    rng = random.Random(0)
    pts = [[rng.randint(1, 9) for _ in m.ground] for _ in range(10)]
    assert not all(cremona_identity_check(m, p, dual_matroid=wrong) for p in pts)


def test_cremona_rejects_zero(cor):
    with pytest.raises(ValueError):
        cremona_identity_check(cor["C3"], [0, 1, 2])
    with pytest.raises(ValueError):
        cremona_identity_check(cor["C3"], [7, 1, 2], 7)


def test_json_roundtrip(cor):
    psi = psi_from_bases(cor["K4"])
    doc = psi.to_json()
    assert MultilinearPoly.from_json(doc) == psi
    masks = [sum(1 << doc["vars"].index(v) for v in t["support"]) for t in doc["terms"]]
    assert masks == sorted(masks)


def test_json_errors():
    with pytest.raises(InputError):
        MultilinearPoly.from_json({"vars": ["a"], "terms": [{"support": ["b"], "coeff": "1"}]})
    with pytest.raises(InputError):
        MultilinearPoly.from_json({"vars": ["a"], "terms": [{"support": ["a"]}]})
