"""Configuration polynomials as sparse multilinear polynomials.

A monomial is a bitmask over the variable list: bit i set means variable i
appears (to the first power). Coefficients are Python ints.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import prod

from .errors import InputError, MatroidError
from .matroid import (
    MAX_GROUND,
    RegularMatroid,
    contract,
    delete,
    dual,
    element_class,
    enumerate_bases,
    irreducible_components,
)


@dataclass(frozen=True, eq=True)
class MultilinearPoly:
    vars: tuple[str, ...]
    terms: dict = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "vars", tuple(str(v) for v in self.vars))
        clean = {int(m): int(c) for m, c in self.terms.items() if c}
        limit = 1 << len(self.vars)
        if any(m < 0 or m >= limit for m in clean):
            raise ValueError("monomial mask outside the variable range")
        object.__setattr__(self, "terms", dict(sorted(clean.items())))

    __hash__ = None

    @property
    def var_count(self) -> int:
        return len(self.vars)

    @property
    def degree(self):
        """Common degree of all monomials; None for the zero polynomial."""
        degs = {m.bit_count() for m in self.terms}
        if not degs:
            return None
        if len(degs) > 1:
            raise ValueError("polynomial is not homogeneous")
        return degs.pop()

    def is_homogeneous(self) -> bool:
        return len({m.bit_count() for m in self.terms}) <= 1

    def index(self, var) -> int:
        if isinstance(var, int) and not isinstance(var, bool):
            if 0 <= var < self.var_count:
                return var
            raise ValueError(f"variable index out of range: {var}")
        try:
            return self.vars.index(str(var))
        except ValueError:
            raise ValueError(f"unknown variable: {var!r}") from None

    def evaluate(self, point, modulus=None):
        if len(point) != self.var_count:
            raise ValueError(f"point has {len(point)} coordinates, expected {self.var_count}")
        if modulus is not None:
            pt = [int(x) % modulus for x in point]
            total = 0
            for mask, c in self.terms.items():
                t = c
                i = 0
                while mask:
                    if mask & 1:
                        t = t * pt[i] % modulus
                    mask >>= 1
                    i += 1
                total += t
            return total % modulus
        total = 0
        for mask, c in self.terms.items():
            total += c * prod(point[i] for i in range(self.var_count) if mask >> i & 1)
        return total

    def split(self, pivot):
        """(G1, G0) with self = x_pivot * G1 + G0, both over the other variables."""
        k = self.index(pivot)
        low = (1 << k) - 1
        rest = self.vars[:k] + self.vars[k + 1:]
        g1, g0 = {}, {}
        for mask, c in self.terms.items():
            squeezed = (mask & low) | ((mask >> (k + 1)) << k)
            (g1 if mask >> k & 1 else g0)[squeezed] = c
        return MultilinearPoly(rest, g1), MultilinearPoly(rest, g0)

    def derivative(self, var) -> "MultilinearPoly":
        g1, _ = self.split(var)
        return g1.embed(self.vars)

    def embed(self, new_vars) -> "MultilinearPoly":
        """Same polynomial over a larger variable list."""
        pos = [list(new_vars).index(v) for v in self.vars]
        terms = {}
        for mask, c in self.terms.items():
            nm = 0
            for i, p in enumerate(pos):
                if mask >> i & 1:
                    nm |= 1 << p
            terms[nm] = c
        return MultilinearPoly(tuple(new_vars), terms)

    def __add__(self, other):
        if self.vars != other.vars:
            raise ValueError("variable lists differ")
        terms = dict(self.terms)
        for m, c in other.terms.items():
            terms[m] = terms.get(m, 0) + c
        return MultilinearPoly(self.vars, terms)

    def __mul__(self, other):
        """Product of polynomials in disjoint variable sets, over the union."""
        if set(self.vars) & set(other.vars):
            raise ValueError("product would leave the multilinear class")
        allv = self.vars + other.vars
        shift = self.var_count
        terms = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                key = m1 | (m2 << shift)
                terms[key] = terms.get(key, 0) + c1 * c2
        return MultilinearPoly(allv, terms)

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for mask, c in self.terms.items():
            mono = "*".join(v for i, v in enumerate(self.vars) if mask >> i & 1)
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts)

    def to_json(self) -> dict:
        return {
            "vars": list(self.vars),
            "terms": [
                {
                    "support": [v for i, v in enumerate(self.vars) if mask >> i & 1],
                    "coeff": str(c),
                }
                for mask, c in self.terms.items()
            ],
        }

    @classmethod
    def from_json(cls, doc) -> "MultilinearPoly":
        try:
            names = [str(v) for v in doc["vars"]]
            terms = {}
            for k, t in enumerate(doc["terms"]):
                mask = 0
                for v in t["support"]:
                    if v not in names:
                        raise InputError(f"terms[{k}].support: unknown variable {v!r}")
                    mask |= 1 << names.index(v)
                terms[mask] = terms.get(mask, 0) + int(t["coeff"])
        except (KeyError, TypeError, ValueError) as exc:
            if isinstance(exc, InputError):
                raise
            raise InputError(f"malformed polynomial document: {exc!r}") from None
        if len(set(names)) != len(names):
            raise InputError("vars: duplicate variable names")
        return cls(tuple(names), terms)


def psi_from_bases(m: RegularMatroid) -> MultilinearPoly:
    """Sum over bases B of the product of the variables outside B."""
    if m.n > MAX_GROUND:
        raise MatroidError(f"ground size {m.n} exceeds the {MAX_GROUND}-element limit")
    full = (1 << m.n) - 1
    return MultilinearPoly(m.ground, {full ^ b: 1 for b in enumerate_bases(m).members})


def psi_deletion_contraction(m: RegularMatroid) -> MultilinearPoly:
    """Same polynomial via the deletion-contraction recursion on the matrix.

    Loops and coloops are peeled off first, otherwise the lowest-indexed
    element is branched on. Minors are memoised by (surviving, contracted)
    sets of original columns.
    """
    if m.n > MAX_GROUND:
        raise MatroidError(f"ground size {m.n} exceeds the {MAX_GROUND}-element limit")
    memo: dict[tuple[int, int], dict[int, int]] = {}

    def rec(minor: RegularMatroid, orig: tuple[int, ...], contracted: int) -> dict[int, int]:
        if not orig:
            return {0: 1}
        key = (sum(1 << j for j in orig), contracted)
        if key in memo:
            return memo[key]
        branch = None
        for j in range(minor.n):
            cls = element_class(minor, j)
            if cls != "ordinary":
                branch = (j, cls)
                break
        if branch is None:
            branch = (0, "ordinary")
        j, cls = branch
        bit = 1 << orig[j]
        rest = orig[:j] + orig[j + 1:]
        out: dict[int, int] = {}
        if cls != "coloop":
            for mask, c in rec(delete(minor, j), rest, contracted).items():
                out[mask | bit] = out.get(mask | bit, 0) + c
        if cls != "loop":
            for mask, c in rec(contract(minor, j), rest, contracted | bit).items():
                out[mask] = out.get(mask, 0) + c
        memo[key] = out
        return out

    return MultilinearPoly(m.ground, rec(m, tuple(range(m.n)), 0))


def evaluate(p: MultilinearPoly, point, modulus=None):
    return p.evaluate(point, modulus)


def factor_by_components(m: RegularMatroid) -> list[MultilinearPoly]:
    """Psi of each connectivity class, each over its own variables."""
    out = []
    for comp in irreducible_components(m):
        cols = [m.index(e) for e in comp]
        out.append(psi_from_bases(m.restrict_columns(cols)))
    return out


def product(polys, vars=None) -> MultilinearPoly:
    """Multiply polynomials on disjoint variable blocks, optionally re-embedding."""
    acc = MultilinearPoly((), {0: 1})
    for p in polys:
        acc = acc * p
    return acc.embed(vars) if vars is not None else acc


def cremona_identity_check(m: RegularMatroid, point, modulus=None, dual_matroid=None) -> bool:
    """Psi_M(x) == prod(x) * Psi_{M*}(1/x) at one point with invertible coordinates.

    Exact rationals when ``modulus`` is None, otherwise arithmetic mod a prime.
    ``dual_matroid`` overrides the computed dual (used for negative controls).
    """
    d = dual(m) if dual_matroid is None else dual_matroid
    if d.ground != m.ground:
        d = d.restrict_columns([d.index(e) for e in m.ground])
    psi = psi_from_bases(m)
    psi_d = psi_from_bases(d)
    if modulus is None:
        pt = [Fraction(x) for x in point]
        if any(x == 0 for x in pt):
            raise ValueError("coordinates must be nonzero")
        inv = [1 / x for x in pt]
        return psi.evaluate(pt) == prod(pt) * psi_d.evaluate(inv)
    pt = [int(x) % modulus for x in point]
    if any(x == 0 for x in pt):
        raise ValueError("coordinates must be units mod p")
    inv = [pow(x, -1, modulus) for x in pt]
    lhs = psi.evaluate(pt, modulus)
    rhs = prod(pt) * psi_d.evaluate(inv, modulus) % modulus
    return lhs == rhs
