from fractions import Fraction

import pytest

from metricmat.corpus import IRREDUCIBLE
from metricmat.density import (
    TRIVIAL_PSI,
    asymptotic_check,
    asymptotic_terms,
    density_empirical,
    density_formula,
    dual_density_check,
    reduce_mod_p,
    sandwich_check,
    sandwich_terms,
    torus_density,
)
from metricmat.errors import BudgetError, MatroidError
from metricmat.matroid import RegularMatroid


def test_reduce_mod_p():
    assert dict(reduce_mod_p({"a": 4, "b": 9}, 3)) == {"a": 1, "b": 3}
    assert dict(reduce_mod_p({"a": 2, "b": 1}, 5)) == {"a": 2, "b": 1}
    assert dict(reduce_mod_p({"a": 8}, 7)) == {"a": 1}


@pytest.mark.parametrize("p", [2, 3, 5, 7, 11, 13])
def test_c2_density(cor, p):
    assert density_formula(cor["C2"], p).value == Fraction(1, p)


def test_formula_examples(cor):
    assert density_formula(cor["diamond"], 2).value == Fraction(16, 32)
    r = density_formula(cor["banana10"], 3)
    assert (r.zeros, r.box) == (53247, 59049)
    assert r.value == Fraction(53247, 59049)


def test_formula_uses_fixture_counts(cor, naive_counts):
    for name, rows in naive_counts.items():
        for p, row in rows.items():
            r = density_formula(cor[name], int(p))
            assert r.value == Fraction(int(row["affine_zeros"]), int(p) ** cor[name].n)


def test_trivial_psi(cor):
    r = density_formula(cor["U11x3"], 3)
    assert r.value == 0 and TRIVIAL_PSI in r.flags
    assert torus_density(cor["path3"], 5).flags == (TRIVIAL_PSI,)


def test_empty_matroid_refused():
    with pytest.raises(MatroidError):
        density_formula(RegularMatroid((), ()), 3)


def test_empirical_examples(cor):
    assert density_empirical(cor["C2"], 2, 2).value == Fraction(1, 2)
    assert density_empirical(cor["C2"], 3, 3).value == Fraction(1, 3)
    assert density_empirical(cor["diamond"], 2, 4).value == Fraction(1, 2)


@pytest.mark.parametrize("name", ["C2", "C3", "diamond", "K4", "banana3"])
def test_empirical_equals_limit(cor, name):
    for p in (2, 3):
        lim = density_formula(cor[name], p).value
        for k in (1, 2, 3):
            if (k * p) ** cor[name].n > 10**6:
                continue
            assert density_empirical(cor[name], p, k * p).value == lim


def test_empirical_budget(cor):
    with pytest.raises(BudgetError):
        density_empirical(cor["banana10"], 2, 7)


@pytest.mark.parametrize("name", ["C2", "C3", "path3", "diamond", "K4", "banana3", "diamond+C2", "U11x3"])
def test_sandwich(cor, name):
    for p in (2, 3):
        for m_max in range(p, 10):
            if m_max ** cor[name].n > 10**6:
                continue
            assert sandwich_check(cor[name], p, m_max), (name, p, m_max)


def test_sandwich_examples(cor):
    assert sandwich_terms(cor["C2"], 2, 6)["l"] == 0
    assert sandwich_check(cor["C2"], 2, 6)
    t = sandwich_terms(cor["diamond"], 3, 7)
    assert (t["t"], t["l"]) == (2, 1)
    assert sandwich_check(cor["diamond"], 3, 7)
    assert sandwich_check(cor["C2"], 5, 5)
    with pytest.raises(ValueError):
        sandwich_check(cor["C2"], 5, 4)


def test_torus_examples(cor, naive_counts):
    assert torus_density(cor["C2"], 2).value == Fraction(1, 4)
    assert torus_density(cor["C2"], 5).value == Fraction(4, 25)
    assert torus_density(cor["diamond"], 3).value == Fraction(int(naive_counts["diamond"]["3"]["torus_zeros"]), 3**5)


def test_dual_densities(cor):
    for name, m in cor.items():
        for p in (2, 3, 5):
            if p ** (m.n - 1) > 10**7:
                continue
            assert dual_density_check(m, p), (name, p)


@pytest.mark.parametrize("name", IRREDUCIBLE)
def test_asymptotic(cor, name):
    for p in (2, 3, 5, 7, 11, 13):
        if p ** (cor[name].n - 1) > 10**9:
            continue
        assert asymptotic_check(cor[name], p)


def test_asymptotic_zero_deviation(cor):
    d = asymptotic_terms(cor["C2"], 7)
    assert d["deviation"] == 0


def test_asymptotic_rejects(cor):
    with pytest.raises(MatroidError):
        asymptotic_check(cor["diamond+C2"], 3)
    with pytest.raises(MatroidError):
        asymptotic_check(cor["U11x3"].restrict_columns([0]), 3)


def test_report_json(cor):
    doc = density_formula(cor["banana10"], 2).to_json()
    assert (doc["num"], doc["den"], doc["zeros"], doc["box"]) == ("507", "512", "1014", "1024")
    assert doc["mode"] == "formula"
    assert abs(doc["approx"] - 1014 / 1024) < 1e-12
