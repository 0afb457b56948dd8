#!/usr/bin/env python3
"""Benchmark the compiled row-reduction kernel against the pure backend.

Runs the same workloads through reflexff._gauss_cy (if built) and
reflexff._gauss_py and prints a speedup table.  Workloads cover the two
shapes that dominate real runs: many small rank computations (the
enumeration scans) and the taller closure constraint systems.
"""

import random
import time

from reflexff import field_make
from reflexff import _gauss_py

try:
    from reflexff import _gauss_cy
except ImportError:
    _gauss_cy = None


def run_pure(mats, rows, cols, f):
    t0 = time.perf_counter()
    for m in mats:
        _gauss_py.row_reduce(list(m), rows, cols, f.q, *f.tables())
    return time.perf_counter() - t0


def run_compiled(mats, rows, cols, f):
    from array import array

    tabs = f.tables_arr()
    t0 = time.perf_counter()
    for m in mats:
        _gauss_cy.row_reduce(array("i", m), rows, cols, f.q, *tabs)
    return time.perf_counter() - t0


def workload(q, rows, cols, count, seed=7):
    rng = random.Random(seed)
    return [tuple(rng.randrange(q) for _ in range(rows * cols))
            for _ in range(count)]


def main():
    cases = [
        ("rank scan 4x4", 2, 4, 4, 20000),
        ("rank scan 4x4", 3, 4, 4, 20000),
        ("rank scan 5x5", 4, 5, 5, 10000),
        ("closure system 60x25", 2, 60, 25, 400),
        ("closure system 60x25", 3, 60, 25, 400),
        ("closure system 120x25", 5, 120, 25, 150),
    ]
    print(f"{'case':<26}{'q':>3}{'pure (s)':>12}{'compiled (s)':>14}{'speedup':>10}")
    for name, q, rows, cols, count in cases:
        f = field_make(*( (q, 1) if q in (2, 3, 5) else (2, 2) ))
        mats = workload(q, rows, cols, count)
        tp = run_pure(mats, rows, cols, f)
        if _gauss_cy is None:
            print(f"{name:<26}{q:>3}{tp:>12.3f}{'n/a':>14}{'n/a':>10}")
            continue
        tc = run_compiled(mats, rows, cols, f)
        print(f"{name:<26}{q:>3}{tp:>12.3f}{tc:>14.3f}{tp / tc:>10.1f}")
    if _gauss_cy is None:
        print("\ncompiled backend not built; run: python setup.py build_ext --inplace")


if __name__ == "__main__":
    main()
