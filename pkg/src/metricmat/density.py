"""Exact p-torsion densities of Jacobians over length maps.

For lengths lam in {1..m}^E the expanded Jacobian has order Psi(lam), so
p-torsion depends only on lam mod p. Reducing into the window {1..p} turns
the limiting density into a zero count of Psi over F_p^N divided by p^N.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .bounds import big_o_constant
from .counting import (
    count_affine,
    count_torus,
    count_zeros_in_box,
    pn_count,
    projective_from_affine,
    require_prime,
)
from .counting.naive import NAIVE_BUDGET
from .errors import BudgetError, MatroidError
from .matroid import LengthMap, RegularMatroid, dual, is_irreducible
from .polynomial import psi_from_bases

TRIVIAL_PSI = "psi_is_one"


class ResidueMap(LengthMap):
    """Lengths reduced mod p into the window {1..p}."""

    def __init__(self, values, p: int):
        super().__init__(values)
        for k, v in self.items():
            if v > p:
                raise MatroidError(f"residue of {k!r} is {v}, outside 1..{p}")
        self.p = p


def reduce_mod_p(lam, p: int) -> ResidueMap:
    require_prime(p)
    lam = lam if isinstance(lam, LengthMap) else LengthMap(lam)
    return ResidueMap({e: (v - 1) % p + 1 for e, v in lam.items()}, p)


@dataclass(frozen=True)
class DensityReport:
    p: int
    value: Fraction
    mode: str
    matroid: str | None = None
    zeros: int | None = None
    box: int | None = None
    projective_points: int | None = None
    flags: tuple[str, ...] = field(default_factory=tuple)

    def __post_init__(self):
        if not 0 <= self.value <= 1:
            raise ArithmeticError(f"density {self.value} outside [0, 1]")

    @property
    def numerator(self) -> int:
        return self.value.numerator

    @property
    def denominator(self) -> int:
        return self.value.denominator

    def to_json(self) -> dict:
        def s(x):
            return None if x is None else str(x)

        return {
            "p": self.p,
            "num": str(self.numerator),
            "den": str(self.denominator),
            "approx": float(self.value),
            "mode": self.mode,
            "matroid": self.matroid,
            "zeros": s(self.zeros),
            "box": s(self.box),
            "projective_points": s(self.projective_points),
            "flags": list(self.flags),
        }


def _psi(m: RegularMatroid):
    if m.n == 0:
        raise MatroidError("density is undefined for the empty matroid")
    return psi_from_bases(m)


def _trivial(psi) -> bool:
    return psi.terms == {0: 1}


def density_formula(m: RegularMatroid, p: int, workers: int = 1, method: str = "elim",
                    matroid_id=None, budget=None) -> DensityReport:
    """mu(J_p(M)) from the projective point count of X_M."""
    require_prime(p)
    psi = _psi(m)
    n = m.n
    box = p**n
    if _trivial(psi):
        # trivial Jacobian: never any p-torsion
        return DensityReport(p, Fraction(0), "formula", matroid_id, 0, box, None, (TRIVIAL_PSI,))
    affine = count_affine(psi, p, method, workers=workers, budget=budget)
    x = projective_from_affine(affine, p)
    num = (p - 1) * x + 1
    den = (p - 1) * pn_count(p, n - 1) + 1
    assert num == affine and den == box, (num, affine, den, box)
    return DensityReport(p, Fraction(num, den), "formula", matroid_id, affine, box, x)


def density_empirical(m: RegularMatroid, p: int, m_max: int, matroid_id=None,
                      budget: int = NAIVE_BUDGET) -> DensityReport:
    """Exhaustive share of lam in {1..m_max}^E with p | Psi(lam)."""
    require_prime(p)
    if m_max < 1:
        raise ValueError("height cap must be >= 1")
    psi = _psi(m)
    box = m_max**m.n
    if box > budget:
        raise BudgetError(f"{m_max}^{m.n} = {box} length maps exceed budget {budget}", box, budget)
    zeros = count_zeros_in_box(psi, p, range(1, m_max + 1), budget)
    flags = (TRIVIAL_PSI,) if _trivial(psi) else ()
    return DensityReport(p, Fraction(zeros, box), f"empirical({m_max})", matroid_id, zeros, box, None, flags)


def sandwich_terms(m: RegularMatroid, p: int, m_max: int) -> dict:
    """Empirical ratio at height m_max = p t + l against the limit ratio."""
    if m_max < p:
        raise ValueError(f"height cap {m_max} is below p = {p}")
    t, l = divmod(m_max, p)
    n = m.n
    emp = density_empirical(m, p, m_max).value
    # A_p/B_p: the window {1..p} is a full residue system
    lim = Fraction(count_zeros_in_box(_psi(m), p, range(1, p + 1)), p**n)
    lower = Fraction(t, t + 1) ** n * lim
    upper = Fraction(t + 1, t) ** n * lim
    return {"t": t, "l": l, "empirical": emp, "limit": lim, "lower": lower, "upper": upper}


def sandwich_check(m: RegularMatroid, p: int, m_max: int) -> bool:
    d = sandwich_terms(m, p, m_max)
    ok = d["lower"] <= d["empirical"] <= d["upper"]
    if d["l"] == 0:
        ok = ok and d["empirical"] == d["limit"]
    return ok


def torus_density(m: RegularMatroid, p: int, workers: int = 1, method: str = "elim",
                  matroid_id=None, budget=None) -> DensityReport:
    """Density of lam whose reduction has no coordinate divisible by p and Psi(lam) = 0 mod p."""
    require_prime(p)
    psi = _psi(m)
    n = m.n
    box = p**n
    if _trivial(psi):
        return DensityReport(p, Fraction(0), "torus", matroid_id, 0, box, None, (TRIVIAL_PSI,))
    tor = count_torus(psi, p, method, workers=workers, budget=budget)
    x_tor, r = divmod(tor, p - 1)
    assert r == 0, tor
    value = Fraction(tor, box)
    assert value == Fraction((p - 1) * x_tor, (p - 1) * pn_count(p, n - 1) + 1)
    return DensityReport(p, value, "torus", matroid_id, tor, box, x_tor)


def dual_density_check(m: RegularMatroid, p: int, workers: int = 1, budget=None) -> bool:
    a = torus_density(m, p, workers, budget=budget).value
    b = torus_density(dual(m), p, workers, budget=budget).value
    return a == b


def asymptotic_terms(m: RegularMatroid, p: int, workers: int = 1, budget=None) -> dict:
    if m.n == 0 or not is_irreducible(m):
        raise MatroidError("asymptotic check needs a nonempty irreducible matroid")
    psi = psi_from_bases(m)
    if _trivial(psi):
        raise MatroidError("psi is constant; the estimate does not apply")
    c = big_o_constant(m.n, psi.degree)
    mu = density_formula(m, p, workers, budget=budget).value
    return {"C": c, "mu": mu, "deviation": abs(mu - Fraction(1, p)), "bound": Fraction(c + 1, p * p)}


def asymptotic_check(m: RegularMatroid, p: int, workers: int = 1, budget=None) -> bool:
    """|mu(J_p(M)) - 1/p| <= (C + 1)/p^2, exactly."""
    d = asymptotic_terms(m, p, workers, budget)
    return d["deviation"] <= d["bound"]
