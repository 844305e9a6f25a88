#!/usr/bin/env python3
"""Benchmark the compiled smoother kernel against the pure-NumPy twin.

Times a full smooth_series call (the all-x pass for the residual
variance dominates) at several series lengths.

    python3 benchmarks/bench_smoother.py [--n 2000 8000 16450] [--grid 80] [--repeat 3]
"""

from __future__ import annotations

import argparse
import random
import time

from sentislope.smoother import SeriesPoint, SmoothParams, smooth_series
from sentislope.smoother import core as smoother_core
from sentislope.smoother import _loesspy

try:
    from sentislope.smoother import _loessc
except ImportError:
    _loessc = None


def make_series(n: int, seed: int = 11) -> list[SeriesPoint]:
    rng = random.Random(seed)
    return [SeriesPoint(float(i), rng.gauss(1.5 + 0.3 * (i % 7 == 0), 1.0)) for i in range(1, n + 1)]


def time_backend(kernel, points, params, repeat: int) -> float:
    saved = smoother_core._KERNEL
    smoother_core._KERNEL = kernel
    try:
        best = float("inf")
        for _ in range(repeat):
            start = time.perf_counter()
            smooth_series(points, params)
            best = min(best, time.perf_counter() - start)
        return best
    finally:
        smoother_core._KERNEL = saved


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n", type=int, nargs="+", default=[2000, 8000, 16450])
    parser.add_argument("--grid", type=int, default=80)
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    params = SmoothParams(grid=args.grid)
    print(f"{'n':>8} {'python':>12} {'cython':>12} {'speedup':>9}")
    for n in args.n:
        points = make_series(n)
        t_py = time_backend(_loesspy, points, params, args.repeat)
        if _loessc is not None:
            t_cy = time_backend(_loessc, points, params, args.repeat)
            print(f"{n:>8} {t_py:>11.4f}s {t_cy:>11.4f}s {t_py / t_cy:>8.1f}x")
        else:
            print(f"{n:>8} {t_py:>11.4f}s {'absent':>12} {'':>9}")


if __name__ == "__main__":
    main()
