"""Jacobian groups of regular matroids: coker(A A^T) and its order."""

from __future__ import annotations

from dataclasses import dataclass
from math import prod

from .errors import MatroidError
from .linalg import bareiss_det, matmul_t
from .matroid import RegularMatroid


@dataclass(frozen=True)
class AbelianGroup:
    """Finite abelian group by invariant factors d_1 | d_2 | ... (each >= 2)."""

    invariant_factors: tuple[int, ...]

    def __post_init__(self):
        fs = tuple(int(d) for d in self.invariant_factors)
        object.__setattr__(self, "invariant_factors", fs)
        if any(d < 2 for d in fs):
            raise ValueError("invariant factors must be >= 2")
        if any(b % a for a, b in zip(fs, fs[1:])):
            raise ValueError("invariant factors must form a divisibility chain")

    @property
    def order(self) -> int:
        return prod(self.invariant_factors)

    def to_json(self) -> dict:
        return {"invariant_factors": list(self.invariant_factors), "order": str(self.order)}


def gram(m: RegularMatroid) -> list[list[int]]:
    return matmul_t(m.matrix)


def smith_invariant_factors(mat) -> list[int]:
    """Diagonal of the Smith normal form of an integer matrix.

    Pivots are chosen as the nonzero entry of least absolute value, ties broken
    by lowest (row, column), which keeps intermediate entries small.
    """
    a = [list(map(int, row)) for row in mat]
    nr = len(a)
    nc = len(a[0]) if nr else 0
    diag = []
    for t in range(min(nr, nc)):
        while True:
            best = None
            for i in range(t, nr):
                for j in range(t, nc):
                    v = a[i][j]
                    if v and (best is None or abs(v) < best[0]):
                        best = (abs(v), i, j)
            if best is None:
                diag.extend([0] * (min(nr, nc) - t))
                return diag
            _, i, j = best
            a[t], a[i] = a[i], a[t]
            for row in a:
                row[t], row[j] = row[j], row[t]
            piv = a[t][t]
            dirty = False
            for i in range(t + 1, nr):
                q = a[i][t] // piv
                if q:
                    rt = a[t]
                    row = a[i]
                    for j in range(t, nc):
                        row[j] -= q * rt[j]
                if a[i][t]:
                    dirty = True
            for j in range(t + 1, nc):
                q = a[t][j] // piv
                if q:
                    for row in a[t:]:
                        row[j] -= q * row[t]
                if a[t][j]:
                    dirty = True
            if dirty:
                continue
            bad = next(
                (i for i in range(t + 1, nr) if any(a[i][j] % piv for j in range(t + 1, nc))),
                None,
            )
            if bad is None:
                break
            a[t] = [x + y for x, y in zip(a[t], a[bad])]
        diag.append(abs(a[t][t]))
    return diag


def jacobian_order(m: RegularMatroid) -> int:
    d = bareiss_det(gram(m))
    if d <= 0:
        raise MatroidError("representation is rank deficient")
    return d


def jacobian_group(m: RegularMatroid) -> AbelianGroup:
    diag = smith_invariant_factors(gram(m))
    if 0 in diag:
        raise MatroidError("representation is rank deficient")
    return AbelianGroup(tuple(d for d in diag if d > 1))


def integer_kernel_basis(mat, ncols: int) -> list[list[int]]:
    """Basis of ker(mat) intersected with Z^n, as a list of column vectors.

    Column operations on the stacked matrix [mat; I] bring ``mat`` to column
    echelon form; the identity part of the trailing zero columns spans the
    kernel lattice because the accumulated transform is unimodular.
    """
    r = len(mat)
    aug = [list(map(int, row)) for row in mat] + [
        [1 if i == j else 0 for j in range(ncols)] for i in range(ncols)
    ]
    t = 0
    for i in range(r):
        while True:
            nz = [c for c in range(t, ncols) if aug[i][c]]
            if not nz:
                break
            c0 = min(nz, key=lambda c: (abs(aug[i][c]), c))
            for row in aug:
                row[t], row[c0] = row[c0], row[t]
            if len(nz) == 1:
                break
            piv = aug[i][t]
            for c in range(t + 1, ncols):
                q = aug[i][c] // piv
                if q:
                    for row in aug:
                        row[c] -= q * row[t]
        if any(aug[i][c] for c in range(t, ncols)):
            t += 1
    return [[aug[r + k][c] for k in range(ncols)] for c in range(t, ncols)]


def flow_lattice_order(m: RegularMatroid) -> int:
    """det(K^T K) for an integral basis K of ker A; the lattice discriminant."""
    basis = integer_kernel_basis(m.matrix, m.n)
    if len(basis) != m.n - m.rank:
        raise MatroidError("representation is rank deficient")
    return bareiss_det(matmul_t(basis))
