"""Compare the compiled and pure-Python eliminative kernels.

    python3 benchmarks/bench_kernel.py [--repeat 3]

Both backends get identical dense tables; the script checks their counts
agree and prints the timings and speedup per case.
"""

import argparse
import time

from metricmat.corpus import corpus
from metricmat.counting import _pykernel
from metricmat.counting.elim import dense_tables
from metricmat.polynomial import psi_from_bases

try:
    from metricmat.counting import _kernel
except ImportError:
    _kernel = None

CASES = [("diamond", 7), ("K4", 5), ("K4", 7), ("diamond+C2", 7), ("banana10", 3), ("banana10", 5)]


def best_of(fn, repeat):
    best, out = float("inf"), None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t0)
    return best, out


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    if _kernel is None:
        print("compiled kernel not built; run `pip install -e . --no-build-isolation` first")
        return
    c = corpus()
    print(f"{'case':<16}{'p':>3}{'python s':>12}{'compiled s':>12}{'speedup':>10}")
    for name, p in CASES:
        t1, t0, k = dense_tables(psi_from_bases(c[name]), 0, p)
        tp, a = best_of(lambda: _pykernel.count_tables(t1, t0, k, p), args.repeat)
        tc, b = best_of(lambda: _kernel.count_tables(t1, t0, k, p), args.repeat)
        assert a == b, (name, p, a, b)
        print(f"{name:<16}{p:>3}{tp:>12.4f}{tc:>12.4f}{tp / tc:>10.1f}")


if __name__ == "__main__":
    main()
