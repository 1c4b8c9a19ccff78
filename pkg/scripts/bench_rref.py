"""Benchmark the compiled row-reduction kernel against the pure fallback.

Runs both implementations on the same deterministic matrices, checks that
they return identical canonical output, and prints a timing table.  Usage:

    python3 scripts/bench_rref.py [--repeat N]
"""

import argparse
import random
import sys
import time
from fractions import Fraction

from coringlab import _rrefpy

try:
    from coringlab import _rrefc
except ImportError:
    _rrefc = None


def int_matrix(rng, nrows, ncols, density):
    return [
        [rng.randint(-9, 9) if rng.random() < density else 0 for _ in range(ncols)]
        for _ in range(nrows)
    ]


def frac_matrix(rng, nrows, ncols, density):
    rows = []
    for _ in range(nrows):
        row = []
        for _ in range(ncols):
            if rng.random() < density:
                row.append(Fraction(rng.randint(-30, 30), rng.randint(1, 12)))
            else:
                row.append(Fraction(0))
        rows.append(row)
    return rows


def rank_deficient(rng, nrows, ncols, rank):
    base = int_matrix(rng, rank, ncols, 0.7)
    rows = []
    for _ in range(nrows):
        coeffs = [rng.randint(-3, 3) for _ in range(rank)]
        rows.append([sum(c * base[k][j] for k, c in enumerate(coeffs))
                     for j in range(ncols)])
    return rows


CASES = [
    ("int 60x80 dense", lambda rng: int_matrix(rng, 60, 80, 0.9)),
    ("int 120x160 sparse", lambda rng: int_matrix(rng, 120, 160, 0.15)),
    ("frac 50x70", lambda rng: frac_matrix(rng, 50, 70, 0.5)),
    ("rank-20 150x120", lambda rng: rank_deficient(rng, 150, 120, 20)),
]


def best_time(fn, repeat):
    best = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        dt = time.perf_counter() - t0
        if best is None or dt < best:
            best = dt
    return best, out


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    if _rrefc is None:
        print("compiled kernel is not built; nothing to compare")
        return 1
    print("%-22s %10s %10s %8s" % ("case", "python", "compiled", "speedup"))
    for name, make in CASES:
        rows = make(random.Random(name))
        ncols = len(rows[0])
        tp, outp = best_time(lambda: _rrefpy.rref_fractions(rows, ncols), args.repeat)
        tc, outc = best_time(lambda: _rrefc.rref_fractions(rows, ncols), args.repeat)
        if outp != outc:
            print("MISMATCH on %r" % name)
            return 1
        print("%-22s %9.4fs %9.4fs %7.1fx" % (name, tp, tc, tp / tc))
    return 0


if __name__ == "__main__":
    sys.exit(main())
