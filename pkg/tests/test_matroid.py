import itertools
import random

import pytest

from metricmat.corpus import banana_graph, c2_graph, corpus_graphs, cycle_graph, figure1_graph
from metricmat.errors import MatroidError
from metricmat.linalg import bareiss_det
from metricmat.matroid import (
    Graph,
    LengthMap,
    RegularMatroid,
    bases_of_expansion_def,
    check_basis_exchange,
    contract,
    delete,
    direct_sum,
    dual,
    element_class,
    enumerate_bases,
    expand,
    expanded_labels,
    height,
    incidence_matroid,
    irreducible_components,
    is_irreducible,
    is_totally_unimodular,
    subdivide_graph,
)


def brute_bases(m):
    """Column subsets of size r with nonzero determinant."""
    out = set()
    for cols in itertools.combinations(range(m.n), m.rank):
        sub = [[row[c] for c in cols] for row in m.matrix]
        if bareiss_det(sub) != 0:
            out.add(frozenset(m.ground[c] for c in cols))
    return out


@pytest.mark.parametrize("name", ["C2", "C3", "path3", "diamond", "K4", "banana3", "banana10", "diamond+C2", "U11x3"])
def test_bases_match_determinants(cor, name):
    m = cor[name]
    b = enumerate_bases(m, validate=True)
    assert b.label_sets() == brute_bases(m)
    assert check_basis_exchange(b)
    assert is_totally_unimodular(m)


def test_known_basis_counts(cor):
    counts = {"C2": 2, "C3": 3, "path3": 1, "diamond": 8, "K4": 16, "banana3": 3, "banana10": 10,
              "diamond+C2": 16, "U11x3": 1}
    assert {k: len(enumerate_bases(m)) for k, m in cor.items()} == counts


def test_non_unimodular_rejected():
    with pytest.raises(MatroidError):
        RegularMatroid(((2, 0), (0, 1)), ("a", "b"))
    with pytest.raises(MatroidError):
        RegularMatroid(((1, 1), (1, 1)), ("a", "b"))  # rank deficient


def test_tu_detects_bad_minor():
    # U_{2,4} needs a non-TU matrix: [[1,0,1,1],[0,1,1,-1]] has a 2x2 minor of -2
    m = RegularMatroid(((1, 0, 1, 1), (0, 1, 1, -1)), ("a", "b", "c", "d"))
    assert not is_totally_unimodular(m)


def test_dual_bases_are_complements(cor):
    for m in cor.values():
        d = dual(m)
        assert d.rank == m.n - m.rank
        assert enumerate_bases(d).label_sets() == enumerate_bases(m).complements().label_sets()


def test_element_classes():
    m = incidence_matroid(figure1_graph())
    assert element_class(m, "l") == "loop"
    assert element_class(m, "a") == "ordinary"
    t = incidence_matroid(Graph.from_edges(3, [(0, 1), (1, 2)]))
    assert element_class(t, "e1") == "coloop"


def test_delete_contract_bases(cor):
    m = cor["diamond"]
    b = enumerate_bases(m).label_sets()
    for e in m.ground:
        assert enumerate_bases(delete(m, e)).label_sets() == {x for x in b if e not in x}
        assert enumerate_bases(contract(m, e)).label_sets() == {x - {e} for x in b if e in x}


def test_loop_contraction_raises():
    m = incidence_matroid(figure1_graph())
    with pytest.raises(MatroidError, match="loop contraction"):
        contract(m, "l")


def test_components(cor):
    assert irreducible_components(cor["diamond+C2"]) == [tuple(f"de{i}" for i in range(1, 6)), ("ce", "cf")]
    assert len(irreducible_components(cor["U11x3"])) == 3
    assert is_irreducible(cor["K4"])
    assert not is_irreducible(cor["path3"])


def test_direct_sum_bases(cor):
    a, b = cor["C3"], cor["C2"]
    s = direct_sum(a, b)
    assert len(enumerate_bases(s)) == 3 * 2


def test_expanded_labels_skip_used():
    eg = expanded_labels(["e", "e#1"], [3, 1])
    assert eg.group("e") == ("e", "e#2", "e#3")
    assert eg.labels == ("e", "e#2", "e#3", "e#1")


def test_expand_c2():
    m = incidence_matroid(c2_graph())
    mx, eg = expand(m, {"e": 2, "f": 3})
    assert mx.rank == 1 + 1 + 2
    assert len(enumerate_bases(mx)) == 5
    assert eg.labels == ("e", "e#1", "f", "f#1", "f#2")


def test_expand_ones_is_identity(cor):
    m = cor["K4"]
    mx, _ = expand(m, LengthMap.ones(m.ground))
    assert enumerate_bases(mx).label_sets() == enumerate_bases(m).label_sets()


def test_loops_survive_expansion():
    m = incidence_matroid(figure1_graph())
    lam = {"l": 2, "a": 2, "b": 1, "c": 3}
    mx, _ = expand(m, lam)
    assert mx.n == 8
    # a loop of length 2 becomes a 2-circuit; the rest is banana-3 with lengths 2,1,3
    assert len(enumerate_bases(mx)) == 2 * (2 * 1 + 2 * 3 + 1 * 3)


@pytest.mark.parametrize("name", sorted(corpus_graphs()))
def test_subdivision_commutes(name):
    g = corpus_graphs()[name]
    rng = random.Random(name)
    m = incidence_matroid(g)
    cap = 2 if len(g.labels) > 6 else 3
    for _ in range(3):
        lam = {e: rng.randint(1, cap) for e in g.labels}
        mx, _ = expand(m, lam)
        gs = incidence_matroid(subdivide_graph(g, lam))
        assert enumerate_bases(gs).label_sets() == enumerate_bases(mx).label_sets()
        assert enumerate_bases(mx).label_sets() == bases_of_expansion_def(m, lam).label_sets()


def test_inductive_expansion():
    # (M_{lam - chi_e})_{1 + chi_e} has the same bases as M_lam
    m = incidence_matroid(cycle_graph(3))
    lam = {"e1": 3, "e2": 1, "e3": 2}
    step, _ = expand(m, {"e1": 2, "e2": 1, "e3": 2})
    lam2 = {g: 1 for g in step.ground}
    lam2["e1"] = 2
    twice, _ = expand(step, lam2)
    once, _ = expand(m, lam)
    assert len(enumerate_bases(twice)) == len(enumerate_bases(once))
    assert twice.rank == once.rank


def test_expansion_preserves_irreducibility(cor):
    mx, _ = expand(cor["diamond"], {"e1": 2, "e2": 1, "e3": 3, "e4": 1, "e5": 2})
    assert is_irreducible(mx)


def test_expand_size_cap():
    m = incidence_matroid(banana_graph(10))
    with pytest.raises(MatroidError, match="64"):
        expand(m, {e: 7 for e in m.ground})


def test_length_map_validation():
    with pytest.raises(MatroidError):
        LengthMap({"a": 0})
    with pytest.raises(MatroidError):
        LengthMap({"a": 1.5})
    with pytest.raises(MatroidError):
        expand(incidence_matroid(c2_graph()), {"e": 1})
    assert height({"a": 3, "b": 1}) == 3
