"""Property-based checks over random small inputs."""

from fractions import Fraction

from hypothesis import given, settings, strategies as st

from metricmat.corpus import corpus
from metricmat.counting import count_affine, count_affine_naive, count_torus, count_torus_naive
from metricmat.density import reduce_mod_p
from metricmat.jacobian import jacobian_order, smith_invariant_factors
from metricmat.matroid import Graph, dual, enumerate_bases, expand, incidence_matroid
from metricmat.polynomial import MultilinearPoly, psi_deletion_contraction, psi_from_bases

small_mats = st.integers(1, 4).flatmap(
    lambda r: st.integers(1, 4).flatmap(
        lambda c: st.lists(st.lists(st.integers(-9, 9), min_size=c, max_size=c), min_size=r, max_size=r)))


@given(small_mats, st.randoms(use_true_random=False))
def test_snf_invariant_under_permutation(mat, rnd):
    rows = list(mat)
    rnd.shuffle(rows)
    perm = list(range(len(mat[0])))
    rnd.shuffle(perm)
    shuffled = [[row[j] for j in perm] for row in rows]
    assert smith_invariant_factors(mat) == smith_invariant_factors(shuffled)


@given(small_mats)
def test_snf_invariant_under_transpose(mat):
    t = [list(c) for c in zip(*mat)]
    assert smith_invariant_factors(mat) == smith_invariant_factors(t)


@given(small_mats, st.integers(0, 3), st.integers(0, 3), st.integers(-3, 3))
def test_snf_invariant_under_row_operation(mat, i, j, k):
    i, j = i % len(mat), j % len(mat)
    if i == j:
        return
    m2 = [list(r) for r in mat]
    m2[i] = [a + k * b for a, b in zip(m2[i], m2[j])]
    assert smith_invariant_factors(mat) == smith_invariant_factors(m2)


graphs = st.integers(2, 5).flatmap(
    lambda v: st.lists(st.tuples(st.integers(0, v - 1), st.integers(0, v - 1)), min_size=1, max_size=7)
    .map(lambda es: Graph.from_edges(v, es)))


@settings(max_examples=60, deadline=None)
@given(graphs)
def test_random_graph_invariants(g):
    m = incidence_matroid(g)
    b = enumerate_bases(m)
    assert jacobian_order(m) == len(b)
    psi = psi_from_bases(m)
    assert psi.terms == psi_deletion_contraction(m).terms
    d = dual(m)
    assert enumerate_bases(d).label_sets() == b.complements().label_sets()


@settings(max_examples=40, deadline=None)
@given(graphs, st.data())
def test_random_main_identity(g, data):
    m = incidence_matroid(g)
    lam = {e: data.draw(st.integers(1, 3)) for e in m.ground}
    assert psi_from_bases(m).evaluate([lam[e] for e in m.ground]) == jacobian_order(expand(m, lam)[0])


@settings(max_examples=40, deadline=None)
@given(graphs, st.sampled_from([2, 3, 5]))
def test_random_counts_agree(g, p):
    psi = psi_from_bases(incidence_matroid(g))
    assert count_affine(psi, p) == count_affine_naive(psi, p)
    assert count_torus(psi, p) == count_torus_naive(psi, p)


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 5), st.dictionaries(st.integers(0, 31), st.integers(-4, 4), max_size=8),
       st.sampled_from([2, 3, 5, 7]))
def test_random_polys_counts_agree(n, terms, p):
    # arbitrary multilinear polynomials, not only configuration ones
    mask = (1 << n) - 1
    poly = MultilinearPoly(tuple(f"x{i}" for i in range(n)), {k & mask: c for k, c in terms.items()})
    assert count_affine(poly, p) == count_affine_naive(poly, p)
    assert count_torus(poly, p) == count_torus_naive(poly, p)


@given(st.dictionaries(st.sampled_from("abcdef"), st.integers(1, 100), min_size=1), st.sampled_from([2, 3, 5, 7]))
def test_residue_window(lam, p):
    r = reduce_mod_p(lam, p)
    for e, v in lam.items():
        assert 1 <= r[e] <= p and (r[e] - v) % p == 0


def test_corpus_psi_values_are_exact():
    psi = psi_from_bases(corpus()["K4"])
    assert psi.evaluate([Fraction(1, 2)] * 6) == Fraction(16, 8)
