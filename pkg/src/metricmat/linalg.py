"""Exact integer linear algebra on list-of-lists matrices.

Everything here works on Python ints, so entries never overflow.
"""

from fractions import Fraction

from .errors import MatroidError


def bareiss_det(mat):
    """Determinant of a square integer matrix by fraction-free elimination."""
    n = len(mat)
    if n == 0:
        return 1
    a = [list(row) for row in mat]
    if any(len(row) != n for row in a):
        raise ValueError("matrix is not square")
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        akk = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            row_i, row_k = a[i], a[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * akk - aik * row_k[j]) // prev
            row_i[k] = 0
        prev = akk
    return sign * a[n - 1][n - 1]


def rank(mat, ncols=None):
    """Rank over the rationals."""
    if not mat:
        return 0
    a = [[Fraction(x) for x in row] for row in mat]
    ncols = len(a[0]) if ncols is None else ncols
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(a)) if a[i][c] != 0), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = 1 / a[r][c]
        for i in range(r + 1, len(a)):
            if a[i][c] != 0:
                f = a[i][c] * inv
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        r += 1
        if r == len(a):
            break
    return r


def matmul_t(a):
    """Return a @ a.T for an integer matrix given as rows."""
    return [[sum(x * y for x, y in zip(ri, rj)) for rj in a] for ri in a]


def unit_row_reduce(rows, ncols):
    """Gauss-Jordan elimination using only +-1 pivots.

    Returns ``(reduced_rows, pivot_columns)``; zero rows are dropped. On a
    totally unimodular input every pivot is a unit and all entries stay in
    {-1, 0, 1}; anything else raises MatroidError.
    """
    a = [list(r) for r in rows]
    out = []
    pivots = []
    while a:
        row = a.pop(0)
        j = next((c for c in range(ncols) if row[c] != 0), None)
        if j is None:
            continue
        if row[j] not in (1, -1):
            raise MatroidError("non-unit pivot: matrix is not totally unimodular")
        if row[j] == -1:
            row = [-x for x in row]
        for other in (*out, *a):
            f = other[j]
            if f:
                for c in range(ncols):
                    other[c] -= f * row[c]
                if any(x not in (-1, 0, 1) for x in other):
                    raise MatroidError("entry growth: matrix is not totally unimodular")
        out.append(row)
        pivots.append(j)
    return out, pivots
