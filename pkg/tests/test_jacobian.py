import itertools
import random
from math import gcd

import pytest

from metricmat.corpus import c2_graph, complete_graph, corpus_graphs
from metricmat.jacobian import (
    AbelianGroup,
    flow_lattice_order,
    jacobian_group,
    jacobian_order,
    smith_invariant_factors,
)
from metricmat.linalg import bareiss_det
from metricmat.matroid import enumerate_bases, expand, incidence_matroid
from metricmat.polynomial import psi_from_bases


def determinantal_divisors(mat):
    """gcd of all k x k minors, k = 1..min(shape); an SNF oracle for small matrices."""
    nr, nc = len(mat), len(mat[0])
    out = []
    for k in range(1, min(nr, nc) + 1):
        g = 0
        for rows in itertools.combinations(range(nr), k):
            for cols in itertools.combinations(range(nc), k):
                g = gcd(g, bareiss_det([[mat[i][j] for j in cols] for i in rows]))
        out.append(g)
    return out


def laplacian_trees(g):
    """Kirchhoff: spanning trees = any cofactor of the Laplacian (connected g)."""
    v = g.vertex_count
    lap = [[0] * v for _ in range(v)]
    for a, b in g.edges:
        if a != b:
            lap[a][a] += 1
            lap[b][b] += 1
            lap[a][b] -= 1
            lap[b][a] -= 1
    return bareiss_det([row[1:] for row in lap[1:]])


def test_snf_against_minors():
    rng = random.Random(5)
    for _ in range(40):
        nr, nc = rng.randint(1, 4), rng.randint(1, 4)
        mat = [[rng.randint(-6, 6) for _ in range(nc)] for _ in range(nr)]
        diag = smith_invariant_factors(mat)
        divs = determinantal_divisors(mat)
        prod = 1
        for k, d in enumerate(diag):
            prod *= d
            assert prod == divs[k]
        for a, b in zip(diag, diag[1:]):
            assert b == 0 or (a != 0 and b % a == 0)


def test_snf_small_cases():
    assert smith_invariant_factors([[6, 0], [0, 4]]) == [2, 12]
    assert smith_invariant_factors([[0, 0], [0, 0]]) == [0, 0]
    assert smith_invariant_factors([[2, 4, 4], [-6, 6, 12], [10, -4, -16]]) == [2, 6, 12]


def test_corpus_orders_agree(cor):
    for name, m in cor.items():
        n = len(enumerate_bases(m))
        assert jacobian_order(m) == flow_lattice_order(m) == jacobian_group(m).order == n, name


def test_kirchhoff():
    for name, g in corpus_graphs().items():
        if name in ("figure1",):
            continue
        assert jacobian_order(incidence_matroid(g)) == laplacian_trees(g), name


def test_known_groups(cor):
    assert jacobian_group(cor["K4"]).invariant_factors == (4, 4)
    assert jacobian_group(cor["diamond"]).invariant_factors == (8,)
    assert jacobian_group(cor["diamond+C2"]).invariant_factors == (2, 8)
    assert jacobian_group(cor["path3"]).invariant_factors == ()
    assert jacobian_group(incidence_matroid(complete_graph(5))).invariant_factors == (5, 5, 5)


def test_cycle_length_sum():
    m = incidence_matroid(c2_graph())
    for a in range(1, 6):
        for b in range(1, 6):
            g = jacobian_group(expand(m, {"e": a, "f": b})[0])
            assert g.order == a + b
            assert len(g.invariant_factors) <= 1


@pytest.mark.parametrize("name", ["C2", "C3", "diamond", "K4", "banana3", "banana10"])
def test_main_identity(cor, name):
    m = cor[name]
    psi = psi_from_bases(m)
    rng = random.Random(name)
    for _ in range(5):
        lam = {e: rng.randint(1, 4 if m.n < 10 else 3) for e in m.ground}
        assert psi.evaluate([lam[e] for e in m.ground]) == jacobian_order(expand(m, lam)[0])


def test_group_json():
    g = AbelianGroup((2, 6))
    assert g.to_json() == {"invariant_factors": [2, 6], "order": "12"}
    with pytest.raises(ValueError):
        AbelianGroup((4, 6))
    with pytest.raises(ValueError):
        AbelianGroup((1, 3))
