"""Benchmark the root-finder kernel: compiled extension vs pure Python.

Runs the same workload through both backends, checks they agree, and prints
per-degree timings with the speedup. Usage:

    python benchmarks/bench_roots.py [--repeats 5] [--batch 200]
"""

import argparse
import time

import numpy as np

from spectral_patch import _roots_py

try:
    from spectral_patch import _roots_cy
except ImportError:
    _roots_cy = None

TOL = 1e-12
MAX_ITER = 200


def workload(rng, batch, degree):
    rows = rng.standard_normal((batch, degree + 1)) + 1j * rng.standard_normal(
        (batch, degree + 1)
    )
    # keep leading entries comfortably away from zero
    rows[:, -1] += np.where(np.abs(rows[:, -1]) < 0.5, 1.0, 0.0)
    return rows


def best_time(fn, repeats):
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--repeats", type=int, default=5, help="timing repeats, best kept")
    ap.add_argument("--batch", type=int, default=200, help="polynomials per degree")
    ap.add_argument("--seed", type=int, default=20260825)
    args = ap.parse_args()

    if _roots_cy is None:
        print("compiled extension not built; timing the pure backend only")

    rng = np.random.default_rng(args.seed)
    print("%8s %12s %12s %9s" % ("degree", "python (ms)", "compiled (ms)", "speedup"))
    for degree in (2, 4, 8, 16, 32):
        rows = workload(rng, args.batch, degree)
        t_py = best_time(
            lambda: _roots_py.aberth_roots_batch(rows, TOL, MAX_ITER), args.repeats
        )
        if _roots_cy is None:
            print("%8d %12.2f %12s %9s" % (degree, t_py * 1e3, "-", "-"))
            continue
        t_cy = best_time(
            lambda: _roots_cy.aberth_roots_batch(rows, TOL, MAX_ITER), args.repeats
        )
        r_py, ok_py = _roots_py.aberth_roots_batch(rows, TOL, MAX_ITER)
        r_cy, ok_cy = _roots_cy.aberth_roots_batch(rows, TOL, MAX_ITER)
        assert ok_py.all() and ok_cy.all()
        drift = np.abs(r_py - r_cy).max()
        scale = 1.0 + np.abs(r_py).max()
        assert drift <= 1e-12 * scale, "backends disagree: %g" % drift
        print(
            "%8d %12.2f %12.2f %8.1fx"
            % (degree, t_py * 1e3, t_cy * 1e3, t_py / t_cy)
        )


if __name__ == "__main__":
    main()
