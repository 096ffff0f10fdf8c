"""Exhaustive zero counting: the reference every faster route is checked against.

Each point of the box is evaluated monomial by monomial; numpy only batches
the points, it does not change the algorithm.
"""

from __future__ import annotations

import itertools

import numpy as np

from ..errors import BudgetError

NAIVE_BUDGET = 10**8
_BLOCK = 1 << 18


def _check_budget(size, budget):
    if size > budget:
        raise BudgetError(f"exhaustive search over {size} points exceeds budget {budget}", size, budget)


def count_common_zeros(polys, p: int, values, budget: int = NAIVE_BUDGET) -> int:
    """Points of ``values``^n where every polynomial vanishes mod p.

    All polynomials must share one variable list.
    """
    polys = list(polys)
    n = polys[0].var_count
    if any(q.vars != polys[0].vars for q in polys):
        raise ValueError("polynomials must share a variable list")
    vals = np.asarray(list(values), dtype=np.int64) % p
    nv = len(vals)
    size = nv**n
    _check_budget(size, budget)
    if size == 0:
        return 0
    inner = 0
    while inner < n and nv ** (inner + 1) <= _BLOCK:
        inner += 1
    outer = n - inner
    # inner variables are the last `inner` ones, laid out as a flat grid
    if inner:
        grids = np.meshgrid(*([vals] * inner), indexing="ij")
        inner_cols = [g.ravel() for g in grids]
    else:
        inner_cols = []
    width = nv**inner
    term_lists = [[(mask, c % p) for mask, c in q.terms.items()] for q in polys]
    total = 0
    for head in itertools.product(vals.tolist(), repeat=outer):
        alive = np.ones(width, dtype=bool)
        for terms in term_lists:
            acc = np.zeros(width, dtype=np.int64)
            for mask, c in terms:
                t = np.full(width, c, dtype=np.int64)
                for i in range(n):
                    if mask >> i & 1:
                        if i < outer:
                            t = t * head[i] % p
                        else:
                            t = t * inner_cols[i - outer] % p
                acc = (acc + t) % p
            alive &= acc == 0
        total += int(alive.sum())
    return total


def count_zeros_in_box(psi, p: int, values, budget: int = NAIVE_BUDGET) -> int:
    return count_common_zeros([psi], p, values, budget)


def count_affine_naive(psi, p: int, budget: int = NAIVE_BUDGET) -> int:
    """Zeros of psi in F_p^n by visiting every point."""
    return count_zeros_in_box(psi, p, range(p), budget)


def count_torus_naive(psi, p: int, budget: int = NAIVE_BUDGET) -> int:
    """Zeros of psi with every coordinate a unit."""
    return count_zeros_in_box(psi, p, range(1, p), budget)
