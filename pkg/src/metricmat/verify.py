"""Invariant suites run by ``metricmat verify`` against the built-in corpus."""

from __future__ import annotations

import random
import time
from fractions import Fraction

from .bounds import bound_check
from .corpus import IRREDUCIBLE, corpus, corpus_graphs
from .counting import (
    count_affine_eliminative,
    count_affine_naive,
    count_torus_eliminative,
    count_torus_naive,
    stembridge_identity_check,
    valid_pivots,
)
from .density import (
    asymptotic_check,
    density_empirical,
    density_formula,
    dual_density_check,
    sandwich_check,
)
from .jacobian import flow_lattice_order, jacobian_group, jacobian_order
from .matroid import (
    bases_of_expansion_def,
    check_basis_exchange,
    dual,
    enumerate_bases,
    expand,
    incidence_matroid,
    is_totally_unimodular,
    subdivide_graph,
)
from .polynomial import (
    MultilinearPoly,
    cremona_identity_check,
    factor_by_components,
    product,
    psi_deletion_contraction,
    psi_from_bases,
)

SUITES = ("matroid", "jacobian", "poly", "count", "density")
SEED = 20240917

DIAMOND_TERMS = [("e1", "e3"), ("e1", "e4"), ("e2", "e3"), ("e2", "e4"),
                 ("e1", "e5"), ("e2", "e5"), ("e3", "e5"), ("e4", "e5")]


def banana_affine(n, p):
    """Closed-form zeros of the n-edge banana polynomial in F_p^n."""
    u = p - 1
    return p**n - u**n - n * u ** (n - 1) + (u**n + (-1) ** n * u) // p


class Recorder:
    def __init__(self, suite):
        self.suite = suite
        self.checks = 0
        self.failures = []

    def check(self, name, case, ok, detail=""):
        self.checks += 1
        if not ok:
            self.failures.append({"suite": self.suite, "check": name, "case": str(case), "detail": str(detail)})

    def guard(self, name, case, fn):
        try:
            ok = fn()
        except Exception as exc:  # a crash is a failure, not an abort
            self.check(name, case, False, f"{type(exc).__name__}: {exc}")
        else:
            self.check(name, case, bool(ok))


def random_lengths(ground, cap, rng):
    return {e: rng.randint(1, cap) for e in ground}


def _cap(m):
    return 3 if m.n > 6 else 4


def suite_matroid(rec, rng):
    for name, m in corpus().items():
        b = enumerate_bases(m, validate=True)
        rec.check("tu", name, is_totally_unimodular(m))
        rec.check("basis_exchange", name, check_basis_exchange(b))
        d = dual(m)
        rec.check("dual_bases", name, enumerate_bases(d).label_sets() == b.complements().label_sets())
        rec.check("dual_involution", name, enumerate_bases(dual(d)).label_sets() == b.label_sets())
        for _ in range(4):
            lam = random_lengths(m.ground, _cap(m), rng)
            case = f"{name} {lam}"
            mx, _ = expand(m, lam)
            extra = sum(v - 1 for v in lam.values())
            rec.check("expansion_rank", case, mx.rank == m.rank + extra)
            bx = enumerate_bases(mx)
            rec.check("expansion_basis_count", case, len(bx) == psi_from_bases(m).evaluate([lam[e] for e in m.ground]))
            rec.check("expansion_definition", case, bx.label_sets() == bases_of_expansion_def(m, lam).label_sets())
    for name, g in corpus_graphs().items():
        m = incidence_matroid(g)
        lam = random_lengths(g.labels, _cap(m), rng)
        gs = incidence_matroid(subdivide_graph(g, lam))
        mx, _ = expand(m, lam)
        rec.check("subdivision_commutes", f"{name} {lam}",
                  enumerate_bases(gs).label_sets() == enumerate_bases(mx).label_sets())


def suite_jacobian(rec, rng):
    for name, m in corpus().items():
        nb = len(enumerate_bases(m))
        rec.check("order_vs_bases", name, jacobian_order(m) == nb)
        rec.check("lattice_vs_bases", name, flow_lattice_order(m) == nb)
        rec.check("group_order", name, jacobian_group(m).order == nb)
        psi = psi_from_bases(m)
        for _ in range(3):
            lam = random_lengths(m.ground, 4, rng)
            mx, _ = expand(m, lam)
            rec.check("psi_equals_jacobian_order", f"{name} {lam}",
                      psi.evaluate([lam[e] for e in m.ground]) == jacobian_order(mx))
    c2 = corpus()["C2"]
    rec.check("c2_expansion", "e=2,f=3", jacobian_group(expand(c2, {"e": 2, "f": 3})[0]).invariant_factors == (5,))
    rec.check("k4_group", "K4", jacobian_group(corpus()["K4"]).invariant_factors == (4, 4))


def suite_poly(rec, rng):
    ref = MultilinearPoly.from_json({
        "vars": ["e1", "e2", "e3", "e4", "e5"],
        "terms": [{"support": list(t), "coeff": "1"} for t in DIAMOND_TERMS],
    })
    rec.check("diamond_reference", "diamond", psi_from_bases(corpus()["diamond"]).terms == ref.terms)
    for name, m in corpus().items():
        psi = psi_from_bases(m)
        rec.check("routes_agree", name, psi_deletion_contraction(m).terms == psi.terms)
        rec.check("homogeneous_corank", name, psi.degree == m.n - m.rank)
        rec.check("factorisation", name, product(factor_by_components(m), psi.vars).terms == psi.terms)
        for _ in range(5):
            pt = [rng.choice([-1, 1]) * rng.randint(1, 9) for _ in m.ground]
            rec.guard("cremona_Q", f"{name} {pt}", lambda: cremona_identity_check(m, pt))
            pt7 = [rng.randint(1, 6) for _ in m.ground]
            rec.guard("cremona_F7", f"{name} {pt7}", lambda: cremona_identity_check(m, pt7, 7))


def suite_count(rec, rng):
    for name, m in corpus().items():
        psi = psi_from_bases(m)
        for p in (2, 3, 5, 7):
            if p**m.n > 10**7:
                continue
            naive = count_affine_naive(psi, p)
            tnaive = count_torus_naive(psi, p)
            for v in valid_pivots(psi):
                case = f"{name} p={p} pivot={psi.vars[v]}"
                rec.check("naive_vs_elim", case, count_affine_eliminative(psi, p, v) == naive)
                rec.check("torus_naive_vs_elim", case, count_torus_eliminative(psi, p, v) == tnaive)
                if p <= 5 and p**m.n <= 10**5:
                    rec.check("split_identity", case, stembridge_identity_check(psi, v, p))
    psi = psi_from_bases(corpus()["banana10"])
    for p in (2, 3, 5, 7):
        rec.check("banana10_closed_form", f"p={p}", count_affine_eliminative(psi, p) == banana_affine(10, p))
    for name in IRREDUCIBLE:
        for p in (2, 3, 5, 7):
            r = bound_check(corpus()[name], p)
            rec.check("bounds", f"{name} p={p}", r.holds and r.polynomial_sandwich)


def suite_density(rec, rng):
    c = corpus()
    for p in (2, 3, 5, 7):
        rec.check("c2_density", f"p={p}", density_formula(c["C2"], p).value == Fraction(1, p))
    for name in ("C2", "C3", "diamond"):
        for p in (2, 3):
            lim = density_formula(c[name], p).value
            for k in (1, 2):
                rec.check("empirical_equals_limit", f"{name} p={p} m={k * p}",
                          density_empirical(c[name], p, k * p).value == lim)
            rec.check("sandwich", f"{name} p={p} m={2 * p + 1}", sandwich_check(c[name], p, 2 * p + 1))
    for name, m in c.items():
        for p in (2, 3):
            rec.check("dual_torus_density", f"{name} p={p}", dual_density_check(m, p))
            rec.guard("density_range", f"{name} p={p}", lambda: 0 <= density_formula(m, p).value <= 1)
    for name in IRREDUCIBLE:
        for p in (2, 3, 5, 7):
            rec.check("asymptotic", f"{name} p={p}", asymptotic_check(c[name], p))


_RUNNERS = {
    "matroid": suite_matroid,
    "jacobian": suite_jacobian,
    "poly": suite_poly,
    "count": suite_count,
    "density": suite_density,
}


def run_suites(names=("all",), seed=SEED) -> dict:
    if "all" in names:
        names = SUITES
    unknown = [n for n in names if n not in _RUNNERS]
    if unknown:
        raise ValueError(f"unknown suite(s): {unknown}")
    results, failures = [], []
    for n in names:
        rec = Recorder(n)
        t0 = time.perf_counter()
        try:
            _RUNNERS[n](rec, random.Random(f"{seed}:{n}"))
        except Exception as exc:
            rec.check("suite_crashed", n, False, f"{type(exc).__name__}: {exc}")
        results.append({"suite": n, "checks": rec.checks, "failures": len(rec.failures),
                        "seconds": round(time.perf_counter() - t0, 2)})
        failures.extend(rec.failures)
    return {"ok": not failures, "suites": results, "failures": failures}
