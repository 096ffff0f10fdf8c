"""Regular matroids as totally unimodular matrices, plus graphs and metric expansion.

A :class:`RegularMatroid` is an ``r x n`` matrix with entries in {-1, 0, 1}
and full row rank, together with labels for its ``n`` columns. Basis lists,
duals and minors are all derived from the matrix.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

from .errors import MatroidError
from .linalg import bareiss_det, unit_row_reduce

MAX_GROUND = 64


@dataclass(frozen=True)
class Graph:
    """Finite multigraph; self-loops and parallel edges are allowed."""

    vertex_count: int
    edges: tuple[tuple[int, int], ...]
    labels: tuple[str, ...]

    def __post_init__(self):
        object.__setattr__(self, "edges", tuple((int(u), int(v)) for u, v in self.edges))
        object.__setattr__(self, "labels", tuple(str(x) for x in self.labels))
        if self.vertex_count < 0:
            raise MatroidError("vertex_count must be nonnegative")
        if len(self.edges) != len(self.labels):
            raise MatroidError("one label per edge required")
        if len(set(self.labels)) != len(self.labels):
            raise MatroidError("edge labels must be distinct")
        for u, v in self.edges:
            if not (0 <= u < self.vertex_count and 0 <= v < self.vertex_count):
                raise MatroidError(f"edge endpoint out of range: {(u, v)}")

    @classmethod
    def from_edges(cls, vertex_count, edges, labels=None):
        edges = list(edges)
        if labels is None:
            labels = [f"e{i + 1}" for i in range(len(edges))]
        return cls(vertex_count, tuple(edges), tuple(labels))


@dataclass(frozen=True)
class RegularMatroid:
    """Totally unimodular representation ``matrix`` with column labels ``ground``."""

    matrix: tuple[tuple[int, ...], ...]
    ground: tuple[str, ...]

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in row) for row in self.matrix)
        ground = tuple(str(x) for x in self.ground)
        object.__setattr__(self, "matrix", rows)
        object.__setattr__(self, "ground", ground)
        n = len(ground)
        if len(set(ground)) != n:
            raise MatroidError("ground labels must be distinct")
        for row in rows:
            if len(row) != n:
                raise MatroidError("row length does not match ground size")
            if any(x not in (-1, 0, 1) for x in row):
                raise MatroidError("entries must lie in {-1, 0, 1}")
        _, pivots = unit_row_reduce(rows, n)
        if len(pivots) != len(rows):
            raise MatroidError("matrix does not have full row rank")

    @property
    def rank(self) -> int:
        return len(self.matrix)

    @property
    def n(self) -> int:
        return len(self.ground)

    def index(self, e) -> int:
        if isinstance(e, int) and not isinstance(e, bool):
            if 0 <= e < self.n:
                return e
            raise MatroidError(f"element index out of range: {e}")
        try:
            return self.ground.index(str(e))
        except ValueError:
            raise MatroidError(f"unknown element: {e!r}") from None

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(row[j] for row in self.matrix)

    def relabel(self, labels: Sequence[str]) -> "RegularMatroid":
        return RegularMatroid(self.matrix, tuple(labels))

    def restrict_columns(self, cols: Sequence[int]) -> "RegularMatroid":
        """Submatrix on ``cols``, reduced back to full row rank."""
        sub = [[row[j] for j in cols] for row in self.matrix]
        reduced, pivots = unit_row_reduce(sub, len(cols))
        if len(pivots) == len(sub):
            reduced = sub
        return RegularMatroid(tuple(map(tuple, reduced)), tuple(self.ground[j] for j in cols))


@dataclass(frozen=True)
class BasisSet:
    """Bases of a matroid as bitmasks over ``ground`` (bit i is ``ground[i]``)."""

    n: int
    r: int
    members: frozenset
    ground: tuple[str, ...] = ()

    def __len__(self):
        return len(self.members)

    def __iter__(self):
        return iter(sorted(self.members))

    def label_sets(self) -> frozenset:
        """Bases as sets of labels, for comparisons across ground orderings."""
        g = self.ground or tuple(str(i) for i in range(self.n))
        return frozenset(
            frozenset(g[i] for i in range(self.n) if mask >> i & 1) for mask in self.members
        )

    def complements(self) -> "BasisSet":
        full = (1 << self.n) - 1
        return BasisSet(self.n, self.n - self.r, frozenset(full ^ b for b in self.members), self.ground)


class LengthMap(Mapping):
    """Positive integer length per ground element."""

    def __init__(self, values: Mapping[str, int] | Iterable[tuple[str, int]]):
        data = dict(values)
        for k, v in data.items():
            if isinstance(v, bool) or int(v) != v or int(v) < 1:
                raise MatroidError(f"length of {k!r} must be a positive integer, got {v!r}")
        self._data = {str(k): int(v) for k, v in data.items()}

    def __getitem__(self, key):
        return self._data[key]

    def __iter__(self):
        return iter(self._data)

    def __len__(self):
        return len(self._data)

    def __repr__(self):
        return f"LengthMap({self._data!r})"

    @classmethod
    def ones(cls, ground):
        return cls({e: 1 for e in ground})

    def values_for(self, ground: Sequence[str]) -> tuple[int, ...]:
        try:
            return tuple(self._data[e] for e in ground)
        except KeyError as exc:
            raise MatroidError(f"no length given for element {exc.args[0]!r}") from None


def as_lengths(lam, ground: Sequence[str]) -> tuple[int, ...]:
    """Normalise a LengthMap, dict, or sequence aligned with ``ground``."""
    if isinstance(lam, Mapping):
        lm = lam if isinstance(lam, LengthMap) else LengthMap(lam)
        extra = set(lm) - set(ground)
        if extra:
            raise MatroidError(f"lengths given for unknown elements: {sorted(extra)}")
        return lm.values_for(ground)
    vals = tuple(lam)
    if len(vals) != len(ground):
        raise MatroidError("length vector does not match ground size")
    return LengthMap(zip(ground, vals)).values_for(ground)


@dataclass(frozen=True)
class ExpandedGround:
    """Per original element, the labels of its class E_e; the first label is e."""

    groups: tuple[tuple[str, tuple[str, ...]], ...] = field(default_factory=tuple)

    @property
    def labels(self) -> tuple[str, ...]:
        return tuple(x for _, g in self.groups for x in g)

    def group(self, e: str) -> tuple[str, ...]:
        for name, g in self.groups:
            if name == e:
                return g
        raise MatroidError(f"unknown element: {e!r}")


def expanded_labels(ground: Sequence[str], lengths: Sequence[int]) -> ExpandedGround:
    """Deterministic labels: e, then e#1, e#2, ... skipping labels already in use."""
    used = set(ground)
    groups = []
    for e, k in zip(ground, lengths):
        g = [e]
        i = 1
        while len(g) < k:
            cand = f"{e}#{i}"
            i += 1
            if cand not in used:
                used.add(cand)
                g.append(cand)
        groups.append((e, tuple(g)))
    return ExpandedGround(tuple(groups))


def height(lam) -> int:
    vals = list(lam.values()) if isinstance(lam, Mapping) else list(lam)
    if not vals:
        raise MatroidError("height of an empty length map is undefined")
    return max(vals)


# -- graphs -----------------------------------------------------------------


def _components(vertex_count, edges):
    parent = list(range(vertex_count))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in edges:
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[max(ru, rv)] = min(ru, rv)
    return [find(v) for v in range(vertex_count)]


def incidence_matroid(g: Graph) -> RegularMatroid:
    """Cycle matroid of ``g``: signed incidence matrix minus one row per component.

    Tail gets +1, head -1, self-loops give a zero column. The dropped row is the
    highest-index vertex of each connected component.
    """
    comp = _components(g.vertex_count, g.edges)
    top = {}
    for v, c in enumerate(comp):
        top[c] = v
    keep = [v for v in range(g.vertex_count) if top[comp[v]] != v]
    rows = []
    for v in keep:
        row = []
        for u, w in g.edges:
            if u == w:
                row.append(0)
            elif v == u:
                row.append(1)
            elif v == w:
                row.append(-1)
            else:
                row.append(0)
        rows.append(tuple(row))
    return RegularMatroid(tuple(rows), g.labels)


def subdivide_graph(g: Graph, lam) -> Graph:
    """Replace each edge e by a path of lam(e) edges labelled e, e#1, ..."""
    lengths = as_lengths(lam, g.labels)
    eg = expanded_labels(g.labels, lengths)
    nv = g.vertex_count
    edges, labels = [], []
    for (u, v), (_, group) in zip(g.edges, eg.groups):
        prev = u
        for i, lab in enumerate(group):
            if i == len(group) - 1:
                nxt = v
            else:
                nxt = nv
                nv += 1
            edges.append((prev, nxt))
            labels.append(lab)
            prev = nxt
    return Graph(nv, tuple(edges), tuple(labels))


# -- bases ------------------------------------------------------------------


def _gf2_columns(m: RegularMatroid) -> list[int]:
    cols = []
    for j in range(m.n):
        v = 0
        for i, row in enumerate(m.matrix):
            if row[j] & 1:
                v |= 1 << i
        cols.append(v)
    return cols


def enumerate_bases(m: RegularMatroid, validate: bool = False) -> BasisSet:
    """All r-subsets of columns with determinant +-1.

    Independence is tested over GF(2), which agrees with the rationals on a
    totally unimodular matrix. With ``validate`` each basis determinant is
    recomputed exactly and must be +-1.
    """
    n, r = m.n, m.rank
    if n > MAX_GROUND:
        raise MatroidError(f"ground size {n} exceeds the {MAX_GROUND}-element bitmask limit")
    cols = _gf2_columns(m)
    found = []

    def reduce(v, basis):
        for b in basis:
            if v ^ b < v:
                v ^= b
        return v

    def rec(start, mask, basis, depth):
        if depth == r:
            found.append(mask)
            return
        for j in range(start, n - (r - depth) + 1):
            v = reduce(cols[j], basis)
            if v:
                nb = sorted(basis + [v], reverse=True)
                rec(j + 1, mask | (1 << j), nb, depth + 1)

    rec(0, 0, [], 0)
    if validate:
        for mask in found:
            idx = [j for j in range(n) if mask >> j & 1]
            d = bareiss_det([[row[j] for j in idx] for row in m.matrix])
            if d not in (1, -1):
                raise MatroidError(f"basis {idx} has determinant {d}; matrix is not totally unimodular")
    return BasisSet(n, r, frozenset(found), m.ground)


def is_totally_unimodular(m: RegularMatroid) -> bool:
    """Exhaustive check of every square submatrix; exponential, small inputs only."""
    rows, n = m.matrix, m.n
    for k in range(1, min(m.rank, n) + 1):
        for ri in itertools.combinations(range(m.rank), k):
            for ci in itertools.combinations(range(n), k):
                if bareiss_det([[rows[i][j] for j in ci] for i in ri]) not in (-1, 0, 1):
                    return False
    return True


def check_basis_exchange(b: BasisSet) -> bool:
    members = b.members
    if not members:
        return False
    for b1 in members:
        for b2 in members:
            diff1 = b1 & ~b2
            diff2 = b2 & ~b1
            while diff1:
                x = diff1 & -diff1
                diff1 ^= x
                base = b1 ^ x
                d2 = diff2
                ok = False
                while d2:
                    y = d2 & -d2
                    d2 ^= y
                    if base | y in members:
                        ok = True
                        break
                if not ok:
                    return False
    return True


# -- duality and minors -----------------------------------------------------


def dual(m: RegularMatroid) -> RegularMatroid:
    """Representation [-D^T | I] of the dual, from the standard form [I | D]."""
    n = m.n
    rows, pivots = unit_row_reduce(m.matrix, n)
    pivot_set = set(pivots)
    out = []
    for c in range(n):
        if c in pivot_set:
            continue
        row = [0] * n
        row[c] = 1
        for i, pc in enumerate(pivots):
            row[pc] = -rows[i][c]
        out.append(tuple(row))
    return RegularMatroid(tuple(out), m.ground)


def element_class(m: RegularMatroid, e) -> str:
    """'loop', 'coloop' or 'ordinary', decided by rank rather than enumeration."""
    j = m.index(e)
    if all(x == 0 for x in m.column(j)):
        return "loop"
    rest = [[x for c, x in enumerate(row) if c != j] for row in m.matrix]
    _, pivots = unit_row_reduce(rest, m.n - 1)
    if len(pivots) < m.rank:
        return "coloop"
    return "ordinary"


def delete(m: RegularMatroid, e) -> RegularMatroid:
    j = m.index(e)
    return m.restrict_columns([c for c in range(m.n) if c != j])


def contract(m: RegularMatroid, e) -> RegularMatroid:
    j = m.index(e)
    col = m.column(j)
    i = next((k for k, x in enumerate(col) if x != 0), None)
    if i is None:
        raise MatroidError(f"loop contraction: {m.ground[j]!r} is a loop")
    rows = [list(r) for r in m.matrix]
    piv = rows[i]
    s = piv[j]
    for k, row in enumerate(rows):
        f = row[j]
        if k != i and f:
            f *= s
            for c in range(m.n):
                row[c] -= f * piv[c]
    out = tuple(
        tuple(x for c, x in enumerate(row) if c != j) for k, row in enumerate(rows) if k != i
    )
    ground = tuple(g for c, g in enumerate(m.ground) if c != j)
    return RegularMatroid(out, ground)


def direct_sum(*ms: RegularMatroid) -> RegularMatroid:
    n = sum(m.n for m in ms)
    rows = []
    offset = 0
    for m in ms:
        for row in m.matrix:
            rows.append((0,) * offset + row + (0,) * (n - offset - m.n))
        offset += m.n
    return RegularMatroid(tuple(rows), tuple(g for m in ms for g in m.ground))


def irreducible_components(m: RegularMatroid) -> list[tuple[str, ...]]:
    """Connectivity classes, via fundamental circuits of one basis.

    Components are listed by their first ground index; labels inside a
    component keep ground order.
    """
    n = m.n
    rows, pivots = unit_row_reduce(m.matrix, n)
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    pivot_set = set(pivots)
    for c in range(n):
        if c in pivot_set:
            continue
        for i, pc in enumerate(pivots):
            if rows[i][c]:
                a, b = find(c), find(pc)
                if a != b:
                    parent[max(a, b)] = min(a, b)
    classes: dict[int, list[int]] = {}
    for j in range(n):
        classes.setdefault(find(j), []).append(j)
    return [tuple(m.ground[j] for j in cls) for _, cls in sorted(classes.items())]


def is_irreducible(m: RegularMatroid) -> bool:
    return m.n > 0 and len(irreducible_components(m)) == 1


# -- metric expansion -------------------------------------------------------


def expand(m: RegularMatroid, lam) -> tuple[RegularMatroid, ExpandedGround]:
    """Metric matroid M_lam, by parallel duplication in the dual.

    Each element e becomes a series class of lam(e) elements; the ground of the
    result lists the classes in the order of ``m.ground``.
    """
    lengths = as_lengths(lam, m.ground)
    total = sum(lengths)
    if total > MAX_GROUND:
        raise MatroidError(f"expanded ground size {total} exceeds the {MAX_GROUND}-element limit")
    eg = expanded_labels(m.ground, lengths)
    d = dual(m)
    cols = [j for j, k in enumerate(lengths) for _ in range(k)]
    dup = tuple(tuple(row[j] for j in cols) for row in d.matrix)
    d_lam = RegularMatroid(dup, eg.labels)
    out = dual(d_lam)
    expected = sum(k - 1 for k in lengths) + m.rank
    if out.rank != expected:
        raise AssertionError(f"expansion rank {out.rank} != {expected}")
    return out, eg


def bases_of_expansion_def(m: RegularMatroid, lam) -> BasisSet:
    """Bases of M_lam straight from the definition, over the ``expand`` ground order."""
    lengths = as_lengths(lam, m.ground)
    total = sum(lengths)
    if total > MAX_GROUND:
        raise MatroidError(f"expanded ground size {total} exceeds the {MAX_GROUND}-element limit")
    eg = expanded_labels(m.ground, lengths)
    offsets = []
    pos = 0
    for k in lengths:
        offsets.append(pos)
        pos += k
    full = (1 << total) - 1
    out = set()
    for b in enumerate_bases(m).members:
        outside = [e for e in range(m.n) if not b >> e & 1]
        choices = [[1 << (offsets[e] + i) for i in range(lengths[e])] for e in outside]
        for pick in itertools.product(*choices):
            out.add(full ^ sum(pick))
    rank = sum(k - 1 for k in lengths) + m.rank
    return BasisSet(total, rank, frozenset(out), eg.labels)
