"""Upper and lower bounds for #X(F_q) of an irreducible configuration hypersurface.

Index convention: psi has N variables, so X lives in P^n with n = N - 1, and
the split psi = x * G1 + G0 puts G1, G0 in P^(n-1). Polynomials in t are
coefficient lists, lowest degree first.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass

from .counting import pn_count, projective_count
from .errors import MatroidError
from .matroid import RegularMatroid, is_irreducible
from .polynomial import psi_from_bases


def couvreur_bound(q: int, ambient: int, dim: int, degree: int) -> int:
    """Bound on #X(F_q) for X in P^ambient equidimensional of given dim and degree."""
    if dim >= ambient:
        raise ValueError("dimension must be smaller than the ambient dimension")
    if degree < 1:
        raise ValueError("degree must be >= 1")
    low = 2 * dim - ambient
    return degree * (pn_count(q, dim) - pn_count(q, low)) + pn_count(q, low)


# -- integer polynomials in t ------------------------------------------------


def _pn_poly(m):
    return [1] * (m + 1) if m >= 0 else []


def _add(*polys):
    out = [0] * max((len(p) for p in polys), default=0)
    for p in polys:
        for i, c in enumerate(p):
            out[i] += c
    while out and out[-1] == 0:
        out.pop()
    return out


def _scale(c, p):
    return [c * x for x in p]


def _shift(p, k=1):
    return [0] * k + list(p) if p else []


def poly_eval(p, t):
    acc = 0
    for c in reversed(p):
        acc = acc * t + c
    return acc


def poly_h(n, m):
    return _add(_scale(m * (m - 1), _pn_poly(n - 3)), _scale(1 + m - m * m, _pn_poly(n - 6)))


def poly_f(n, m):
    """Monic upper polynomial f(t) of degree n - 1."""
    if m == 1:
        return _pn_poly(n - 1)
    return _add(_pn_poly(n - 1), _shift(poly_h(n, m)))


def poly_g(n, m):
    """Monic lower polynomial g(t) of degree n - 1."""
    if m == 1:
        return _pn_poly(n - 1)
    return _add(_pn_poly(n - 1), _scale(-(m - 1), _pn_poly(n - 2)), _scale(m, _pn_poly(n - 4)), [1])


def big_o_constant(n_vars: int, degree: int) -> int:
    """C with |#X(F_q) - q^(N-2)| <= C q^(N-3), N = n_vars.

    C is the larger absolute coefficient sum of f - t^(n-1) and g - t^(n-1),
    n = N - 1, floored at 1.
    """
    if degree < 1:
        raise ValueError("degree must be >= 1")
    n = n_vars - 1
    if n < 1:
        return 1
    lead = [0] * (n - 1) + [1]
    c1 = sum(abs(c) for c in _add(poly_f(n, degree), _scale(-1, lead)))
    c2 = sum(abs(c) for c in _add(poly_g(n, degree), _scale(-1, lead)))
    return max(c1, c2, 1)


# -- bounds on a concrete matroid --------------------------------------------


def generic_bounds(q, n, m):
    """(lower, upper) from the split identity with Couvreur at its own indices."""
    top = pn_count(q, n - 1)
    if m == 1:
        return top, top
    inter = couvreur_bound(q, n - 1, n - 3, m * (m - 1))
    g1 = couvreur_bound(q, n - 1, n - 2, m - 1)
    return top - g1 + 1, q * inter + top + 1


def weak_bounds(q, n, m):
    """(lower, upper) with the looser P^(n-6) and P^(n-4) correction terms."""
    top = pn_count(q, n - 1)
    if m == 1:
        return top, top
    h = m * (m - 1) * (pn_count(q, n - 3) - pn_count(q, n - 6)) + pn_count(q, n - 6)
    g1 = (m - 1) * (pn_count(q, n - 2) - pn_count(q, n - 4)) + pn_count(q, n - 4)
    return top - g1 + 1, q * h + top + 1


@dataclass(frozen=True)
class BoundReport:
    p: int
    ambient: int
    degree: int
    projective_points: int
    lower: int
    upper: int
    lower_weak: int
    upper_weak: int
    g_value: int
    f_value: int
    big_o_constant: int

    @property
    def holds(self) -> bool:
        x = self.projective_points
        return self.lower <= x <= self.upper and self.lower_weak <= x <= self.upper_weak

    @property
    def polynomial_sandwich(self) -> bool:
        return self.g_value <= self.projective_points <= self.f_value

    def to_json(self) -> dict:
        d = {k: str(v) if isinstance(v, int) and k not in ("p", "ambient", "degree") else v
             for k, v in asdict(self).items()}
        d["holds"] = self.holds
        d["polynomial_sandwich"] = self.polynomial_sandwich
        return d


def bound_check(m: RegularMatroid, p: int, workers: int = 1) -> BoundReport:
    if not is_irreducible(m):
        raise MatroidError("bound_check needs an irreducible matroid")
    psi = psi_from_bases(m)
    deg = psi.degree
    if deg == 0:
        raise MatroidError("psi is constant")
    n = m.n - 1
    x = projective_count(psi, p, workers=workers)
    lo, hi = generic_bounds(p, n, deg)
    plo, phi = weak_bounds(p, n, deg)
    return BoundReport(
        p=p,
        ambient=n,
        degree=deg,
        projective_points=x,
        lower=lo,
        upper=hi,
        lower_weak=plo,
        upper_weak=phi,
        g_value=poly_eval(poly_g(n, deg), p),
        f_value=poly_eval(poly_f(n, deg), p),
        big_o_constant=big_o_constant(m.n, deg),
    )
