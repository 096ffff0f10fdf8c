"""Point counts of configuration hypersurfaces over prime fields."""

from __future__ import annotations

from dataclasses import dataclass

from .elim import ELIM_BUDGET, count_affine_eliminative, count_eliminative, count_torus_eliminative
from .kernel import BACKEND
from .naive import (
    NAIVE_BUDGET,
    count_affine_naive,
    count_common_zeros,
    count_torus_naive,
    count_zeros_in_box,
)


def _kw(budget, default):
    return {"budget": default if budget is None else budget}


def _constant_zeros(psi, p, width):
    # psi is a constant c: every point of the box is a zero iff p | c
    c = psi.terms.get(0, 0)
    return width**psi.var_count if c % p == 0 else 0


def is_prime(p) -> bool:
    if isinstance(p, bool) or not isinstance(p, int) or p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


def require_prime(p):
    if not is_prime(p):
        raise ValueError(f"modulus must be prime, got {p!r}")


def pn_count(q: int, m: int) -> int:
    """#P^m(F_q); zero when m < 0."""
    if m < 0:
        return 0
    return (q ** (m + 1) - 1) // (q - 1)


def valid_pivots(psi) -> list[int]:
    """Variables occurring in some monomial (nonzero partial derivative)."""
    used = 0
    for mask in psi.terms:
        used |= mask
    return [i for i in range(psi.var_count) if used >> i & 1]


def count_affine(psi, p, method="elim", pivot=None, workers=1, budget=None):
    require_prime(p)
    if method == "naive":
        return count_affine_naive(psi, p, **_kw(budget, NAIVE_BUDGET))
    if method != "elim":
        raise ValueError(f"unknown method {method!r}")
    if pivot is None:
        pivots = valid_pivots(psi)
        if not pivots:
            return _constant_zeros(psi, p, p)
        pivot = pivots[0]
    return count_affine_eliminative(psi, p, pivot, workers, **_kw(budget, ELIM_BUDGET))


def count_torus(psi, p, method="elim", pivot=None, workers=1, budget=None):
    """Zeros of psi with all coordinates in F_p^*."""
    require_prime(p)
    if method == "naive":
        return count_torus_naive(psi, p, **_kw(budget, NAIVE_BUDGET))
    if method != "elim":
        raise ValueError(f"unknown method {method!r}")
    if pivot is None:
        pivots = valid_pivots(psi)
        if not pivots:
            return _constant_zeros(psi, p, p - 1)
        pivot = pivots[0]
    return count_torus_eliminative(psi, p, pivot, workers, **_kw(budget, ELIM_BUDGET))


def projective_from_affine(affine_zeros: int, p: int) -> int:
    q, r = divmod(affine_zeros - 1, p - 1)
    if r:
        raise ArithmeticError("affine zero count is not 1 mod (p-1); input not homogeneous?")
    return q


def projective_count(psi, p, method="elim", pivot=None, workers=1, budget=None) -> int:
    """#X(F_p) = (affine zeros - 1) / (p - 1) for homogeneous psi of degree >= 1."""
    deg = psi.degree
    if not deg:
        raise ValueError("projective count needs a homogeneous polynomial of degree >= 1")
    return projective_from_affine(count_affine(psi, p, method, pivot, workers, budget), p)


@dataclass(frozen=True)
class CountReport:
    p: int
    n_vars: int
    affine_zeros: int
    projective_points: int | None
    torus_zeros: int | None
    method: str

    def to_json(self) -> dict:
        def s(x):
            return None if x is None else str(x)

        return {
            "p": self.p,
            "n_vars": self.n_vars,
            "method": self.method,
            "affine_zeros": s(self.affine_zeros),
            "projective_points": s(self.projective_points),
            "torus_zeros": s(self.torus_zeros),
        }


def count_report(psi, p, method="elim", pivot=None, workers=1, torus=False, budget=None) -> CountReport:
    affine = count_affine(psi, p, method, pivot, workers, budget)
    proj = projective_from_affine(affine, p) if psi.degree else None
    tor = count_torus(psi, p, method, pivot, workers, budget) if torus else None
    return CountReport(p, psi.var_count, affine, proj, tor, method)


def _projective_common(polys, p) -> int:
    """Projective points where all homogeneous ``polys`` vanish (naive)."""
    for q in polys:
        if q.terms and q.degree == 0:
            return 0
    affine = count_common_zeros(polys, p, range(p))
    return projective_from_affine(affine, p)


def stembridge_terms(psi, pivot, p, x_f=None) -> dict:
    """Independent naive counts entering the split-variable point identity.

    ``x_f`` may carry #X_F from an earlier call with another pivot.
    """
    require_prime(p)
    g1, g0 = psi.split(pivot)
    if not g1.terms:
        raise ValueError("invalid pivot: psi does not depend on it")
    k = g1.var_count
    if x_f is None:
        x_f = projective_from_affine(count_affine_naive(psi, p), p)
    x_g1 = _projective_common([g1], p)
    x_both = _projective_common([g1, g0], p)
    # the cone vertex [1:0:...:0] lies on X_F exactly when G1 vanishes there
    vertex = 1 if g1.degree >= 1 else 0
    rhs = p * x_both + pn_count(p, k - 1) - x_g1 + vertex
    return {"X_F": x_f, "X_G1": x_g1, "X_G1_cap_X_G0": x_both, "P": pn_count(p, k - 1),
            "vertex": vertex, "rhs": rhs}


def stembridge_identity_check(psi, pivot, p) -> bool:
    t = stembridge_terms(psi, pivot, p)
    return t["X_F"] == t["rhs"]


__all__ = [
    "BACKEND",
    "CountReport",
    "count_affine",
    "count_affine_eliminative",
    "count_affine_naive",
    "count_common_zeros",
    "count_eliminative",
    "count_report",
    "count_torus",
    "count_torus_eliminative",
    "count_torus_naive",
    "count_zeros_in_box",
    "is_prime",
    "pn_count",
    "projective_count",
    "projective_from_affine",
    "require_prime",
    "stembridge_identity_check",
    "stembridge_terms",
    "valid_pivots",
]
