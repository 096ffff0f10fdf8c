"""Eliminative point counting: split off one variable and count its fibre exactly.

Writing psi = x * G1 + G0 with x the pivot, each assignment y of the other
variables contributes 1 if G1(y) != 0, p if G1(y) = G0(y) = 0, and 0
otherwise. The outer space F_p^(n-1) is cut into blocks by fixing the leading
coordinates; blocks can run in worker processes and their counts are summed,
so the total does not depend on the partition.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor

import numpy as np

from ..errors import BudgetError
from . import kernel

ELIM_BUDGET = 10**9
MAX_TABLE_BITS = 24


def dense_tables(psi, pivot, p: int):
    """Dense coefficient tables (mod p) of G1 and G0 for the given pivot."""
    g1, g0 = psi.split(pivot)
    if not g1.terms:
        raise ValueError(
            f"pivot {psi.vars[psi.index(pivot)]!r} does not occur in psi "
            "(zero derivative: a coloop); choose another pivot"
        )
    k = g1.var_count
    if k > MAX_TABLE_BITS:
        raise BudgetError(f"{k} free variables exceed the dense-table limit {MAX_TABLE_BITS}", k, MAX_TABLE_BITS)
    t1 = np.zeros(1 << k, dtype=np.int64)
    t0 = np.zeros(1 << k, dtype=np.int64)
    for mask, c in g1.terms.items():
        t1[mask] = c % p
    for mask, c in g0.terms.items():
        t0[mask] = c % p
    return t1, t0, k


def _substitute(t1, t0, head, p):
    """Fix the top ``len(head)`` variables (highest bit first)."""
    for v in head:
        h = len(t1) >> 1
        t1 = (t1[:h] + v * t1[h:]) % p
        t0 = (t0[:h] + v * t0[h:]) % p
    return t1, t0


def _count_block(args):
    t1, t0, k, p, torus, heads = args
    total = 0
    for head in heads:
        s1, s0 = _substitute(t1, t0, head, p)
        total += kernel.count_tables(s1, s0, k - len(head), p, torus)
    return total


def _plan(k, p, workers, blocks):
    if blocks is None:
        blocks = 0
        while workers > 1 and blocks < k - 1 and p**blocks < 4 * workers:
            blocks += 1
    if not 0 <= blocks <= max(k - 1, 0):
        raise ValueError(f"blocks must lie in [0, {max(k - 1, 0)}]")
    return blocks


def count_eliminative(psi, p: int, pivot=0, workers: int = 1, blocks=None, torus: bool = False,
                      budget: int = ELIM_BUDGET) -> int:
    n = psi.var_count
    if n == 0:
        raise ValueError("a constant polynomial has no pivot")
    if workers < 1:
        raise ValueError("workers must be >= 1")
    work = p ** (n - 1)
    if work > budget:
        raise BudgetError(f"p^(n-1) = {work} exceeds budget {budget}", work, budget)
    t1, t0, k = dense_tables(psi, pivot, p)
    b = _plan(k, p, workers, blocks)
    values = range(1, p) if torus else range(p)
    heads = list(itertools.product(values, repeat=b))
    if workers == 1:
        return _count_block((t1, t0, k, p, torus, heads))
    nchunks = min(len(heads), 4 * workers)
    chunks = [heads[i::nchunks] for i in range(nchunks)]
    tasks = [(t1, t0, k, p, torus, c) for c in chunks if c]
    with ProcessPoolExecutor(max_workers=workers) as ex:
        return sum(ex.map(_count_block, tasks))


def count_affine_eliminative(psi, p: int, pivot=0, workers: int = 1, blocks=None,
                             budget: int = ELIM_BUDGET) -> int:
    """Zeros of psi in F_p^n in O(p^(n-1)) work."""
    return count_eliminative(psi, p, pivot, workers, blocks, False, budget)


def count_torus_eliminative(psi, p: int, pivot=0, workers: int = 1, blocks=None,
                            budget: int = ELIM_BUDGET) -> int:
    """Zeros of psi in (F_p^*)^n; the pivot fibre is restricted to units."""
    return count_eliminative(psi, p, pivot, workers, blocks, True, budget)
