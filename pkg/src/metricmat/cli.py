"""Command-line entry point: ``metricmat <command> ...``.

Exit codes: 0 success, 1 verification failure, 2 input error, 3 budget refusal.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field

from .counting import count_report, is_prime
from .counting.elim import ELIM_BUDGET
from .density import (
    asymptotic_terms,
    density_empirical,
    density_formula,
    dual_density_check,
    sandwich_terms,
    torus_density,
)
from .errors import BudgetError, InputError, MatroidError
from .io import as_matroid, dumps, load_input, matroid_to_json, parse_lengths
from .jacobian import jacobian_group
from .matroid import expand
from .polynomial import psi_deletion_contraction, psi_from_bases
from .verify import SUITES, run_suites

MAX_PRIME = 31
EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_BUDGET = 0, 1, 2, 3


@dataclass
class RunConfig:
    command: str
    input: str | None = None
    p: int | None = None
    method: str | None = None
    pivot: str | None = None
    torus: bool = False
    workers: int = 1
    lengths: str | None = None
    empirical: int | None = None
    check: str | None = None
    suites: list = field(default_factory=list)
    output: str | None = None


def _prime(p):
    if not is_prime(p):
        raise InputError(f"--p must be prime, got {p}")
    if p > MAX_PRIME:
        raise BudgetError(f"primes above {MAX_PRIME} are refused", p, MAX_PRIME)
    return p


def _elim_budget(p, n):
    work = p ** max(n - 1, 0)
    if work > ELIM_BUDGET:
        raise BudgetError(f"p^(n-1) = {p}^{n - 1} = {work} exceeds {ELIM_BUDGET}", work, ELIM_BUDGET)


def _matroid(cfg):
    return as_matroid(*load_input(cfg.input))


def _psi_of(cfg):
    kind, obj = load_input(cfg.input)
    if kind == "poly":
        return obj
    return psi_from_bases(as_matroid(kind, obj))


def cmd_psi(cfg):
    m = _matroid(cfg)
    psi = psi_deletion_contraction(m) if cfg.method == "dc" else psi_from_bases(m)
    return psi.to_json(), EXIT_OK


def cmd_jac(cfg):
    m = _matroid(cfg)
    if cfg.lengths:
        m, _ = expand(m, parse_lengths(cfg.lengths))
    return jacobian_group(m).to_json(), EXIT_OK


def cmd_expand(cfg):
    if not cfg.lengths:
        raise InputError("expand needs --lengths")
    m, _ = expand(_matroid(cfg), parse_lengths(cfg.lengths))
    return matroid_to_json(m), EXIT_OK


def cmd_count(cfg):
    p = _prime(cfg.p)
    psi = _psi_of(cfg)
    method = cfg.method or "elim"
    if method == "elim":
        _elim_budget(p, psi.var_count)
    pivot = None
    if cfg.pivot is not None:
        if cfg.pivot not in psi.vars:
            raise InputError(f"--pivot: unknown variable {cfg.pivot!r}")
        pivot = psi.vars.index(cfg.pivot)
    r = count_report(psi, p, method, pivot, cfg.workers, cfg.torus)
    return r.to_json(), EXIT_OK


def _frac(x):
    return {"num": str(x.numerator), "den": str(x.denominator)}


def cmd_density(cfg):
    p = _prime(cfg.p)
    m = _matroid(cfg)
    if cfg.empirical is not None:
        rep = density_empirical(m, p, cfg.empirical)
    else:
        _elim_budget(p, m.n)
        rep = (torus_density if cfg.torus else density_formula)(m, p, cfg.workers)
    doc = rep.to_json()
    status = EXIT_OK
    if cfg.check == "sandwich":
        t = sandwich_terms(m, p, cfg.empirical or 2 * p + 1)
        ok = t["lower"] <= t["empirical"] <= t["upper"] and (t["l"] or t["empirical"] == t["limit"])
        doc["check"] = {"name": "sandwich", "holds": bool(ok), "t": t["t"], "l": t["l"],
                        **{k: _frac(t[k]) for k in ("empirical", "limit", "lower", "upper")}}
    elif cfg.check == "dual":
        _elim_budget(p, m.n)
        ok = dual_density_check(m, p, cfg.workers)
        doc["check"] = {"name": "dual", "holds": ok}
    elif cfg.check == "asymptotic":
        _elim_budget(p, m.n)
        t = asymptotic_terms(m, p, cfg.workers)
        ok = t["deviation"] <= t["bound"]
        doc["check"] = {"name": "asymptotic", "holds": ok, "C": str(t["C"]),
                        "deviation": _frac(t["deviation"]), "bound": _frac(t["bound"])}
    if cfg.check and not doc["check"]["holds"]:
        status = EXIT_FAIL
    return doc, status


def cmd_verify(cfg):
    res = run_suites(cfg.suites or ["all"])
    return res, EXIT_OK if res["ok"] else EXIT_FAIL


COMMANDS = {
    "psi": cmd_psi,
    "jac": cmd_jac,
    "expand": cmd_expand,
    "count": cmd_count,
    "density": cmd_density,
    "verify": cmd_verify,
}


def build_parser():
    ap = argparse.ArgumentParser(prog="metricmat", description="Jacobians, configuration polynomials and "
                                 "p-torsion densities of regular matroids.")
    sub = ap.add_subparsers(dest="command", required=True)

    def add(name, help, inp=True):
        sp = sub.add_parser(name, help=help)
        if inp:
            sp.add_argument("--input", required=True, help="graph, matroid or polynomial JSON file")
        sp.add_argument("--output", help="write the JSON report here instead of stdout")
        return sp

    sp = add("psi", "configuration polynomial")
    sp.add_argument("--method", choices=["bases", "dc"], default="bases")
    sp = add("jac", "Jacobian group")
    sp.add_argument("--expand", dest="lengths", metavar="LENGTHS", help="length map (inline JSON or file)")
    sp = add("expand", "metric expansion as a matroid document")
    sp.add_argument("--lengths", required=True, help="length map (inline JSON or file)")
    for name, help in (("count", "F_p point counts"), ("density", "p-torsion densities")):
        sp = add(name, help)
        sp.add_argument("--p", type=int, required=True)
        sp.add_argument("--torus", action="store_true")
        sp.add_argument("--workers", type=int, default=1)
        if name == "count":
            sp.add_argument("--method", choices=["naive", "elim"], default="elim")
            sp.add_argument("--pivot")
        else:
            sp.add_argument("--empirical", type=int, metavar="M", help="exhaustive density over {1..M}^E")
            sp.add_argument("--check", choices=["sandwich", "dual", "asymptotic"])
    sp = add("verify", "run invariant suites on the built-in corpus", inp=False)
    sp.add_argument("--suite", dest="suites", action="append", choices=["all", *SUITES])
    return ap


def run(cfg: RunConfig):
    """(document, exit status) for one request; errors become documents too."""
    if cfg.workers < 1:
        return {"error": "input", "message": "--workers must be >= 1"}, EXIT_INPUT
    try:
        return COMMANDS[cfg.command](cfg)
    except BudgetError as exc:
        return {"error": "budget", "message": str(exc), "budget": str(exc.budget),
                "limit": str(exc.limit)}, EXIT_BUDGET
    except (InputError, MatroidError, ValueError) as exc:
        return {"error": "input", "message": str(exc)}, EXIT_INPUT


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    cfg = RunConfig(**{k: v for k, v in vars(args).items() if k in RunConfig.__dataclass_fields__})
    doc, status = run(cfg)
    text = dumps(doc)
    if "error" in doc:
        sys.stderr.write(text)
        return status
    if cfg.output:
        with open(cfg.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return status


if __name__ == "__main__":
    sys.exit(main())
