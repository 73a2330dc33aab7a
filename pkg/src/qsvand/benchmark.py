"""Wall-time comparison of the fast inverse against the dense oracle."""

from __future__ import annotations

import time

import numpy as np

from .displacement import DisplacementInstance, materialize
from .inversion import invert
from .oracle import dense_inverse
from .sampling import random_system, random_nodes

ORACLE_MAX_N = 512


def bench_instance(family, n: int, alpha_rank: int, rng) -> DisplacementInstance:
    sys = random_system(family, n, rng)
    x = random_nodes(n, rng)
    return DisplacementInstance(sys, x, rng.standard_normal((n, alpha_rank)),
                                rng.standard_normal((alpha_rank, n)))


def _median_time(fn, reps):
    times = []
    for _ in range(reps):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return float(np.median(times))


def fit_exponent(sizes, seconds):
    """Least-squares slope of ``log t`` against ``log n``; None below two sizes."""
    if len(sizes) < 2:
        return None
    slope, _ = np.polyfit(np.log(sizes), np.log(seconds), 1)
    return float(slope)


def run_bench(family, sizes, reps: int = 3, alpha_rank: int = 1, seed: int = 0):
    """Rows ``(n, fast_seconds, oracle_seconds or None)`` plus the fitted exponent.

    Random real-node instances of size ~100 and up are numerically singular,
    so the fast path runs with its singularity checks off: this measures the
    cost of the operations, not the accuracy of the result.
    """
    rng = np.random.default_rng(seed)
    rows = []
    with np.errstate(all="ignore"):
        for n in sizes:
            inst = bench_instance(family, n, alpha_rank, rng)
            invert(inst, report=False, pivot_tol=None)      # warm-up (JIT)
            fast = _median_time(lambda: invert(inst, report=False, pivot_tol=None), reps)
            oracle = None
            if n <= ORACLE_MAX_N:
                oracle = _median_time(lambda: dense_inverse(materialize(inst)), reps)
            rows.append((n, fast, oracle))
    exponent = fit_exponent([r[0] for r in rows], [r[1] for r in rows])
    return rows, exponent
