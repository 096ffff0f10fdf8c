"""Regenerate tests/fixtures from the exhaustive counter only.

    python3 scripts/generate_fixtures.py

Writes input documents for the corpus graphs and matroids, and affine/torus
zero counts from count_affine_naive / count_torus_naive. The eliminative
kernel is never called here, so the fixtures stay an independent reference.
"""

import json
import sys
import time
from pathlib import Path

from metricmat.corpus import corpus, corpus_graphs
from metricmat.counting.naive import count_affine_naive, count_torus_naive
from metricmat.io import graph_to_json, matroid_to_json
from metricmat.polynomial import psi_from_bases

ROOT = Path(__file__).resolve().parent.parent / "tests" / "fixtures"
PRIMES = (2, 3, 5, 7)
# a one-off oracle run may go past the interactive budget: banana10 at p=7
# visits 7^10 ~ 2.8e8 points (a few minutes)
BUDGET = 3 * 10**8


def dump(path, doc):
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(json.dumps(doc, sort_keys=True, indent=2) + "\n")


def main():
    for name, g in corpus_graphs().items():
        dump(ROOT / "inputs" / f"{name}.graph.json", graph_to_json(g))
    counts = {}
    for name, m in corpus().items():
        dump(ROOT / "inputs" / f"{name}.matroid.json", matroid_to_json(m))
        psi = psi_from_bases(m)
        rows = {}
        for p in PRIMES:
            if p**m.n > BUDGET:
                continue
            t0 = time.perf_counter()
            rows[str(p)] = {
                "affine_zeros": str(count_affine_naive(psi, p, BUDGET)),
                "torus_zeros": str(count_torus_naive(psi, p, BUDGET)),
            }
            print(f"{name} p={p}: {rows[str(p)]} ({time.perf_counter() - t0:.1f}s)", file=sys.stderr)
        counts[name] = rows
    dump(ROOT / "naive_counts.json", {
        "generated_by": "python3 scripts/generate_fixtures.py",
        "method": "count_affine_naive / count_torus_naive",
        "counts": counts,
    })


if __name__ == "__main__":
    main()
