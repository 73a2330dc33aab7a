"""Shared helpers for the test-suite (random instances and dense references)."""

import numpy as np

from qsvand.displacement import DisplacementInstance, materialize
from qsvand.oracle import cond_estimate, dense_inverse
from qsvand.poly_systems import evaluate_system
from qsvand.sampling import random_nodes, random_system

FAMILIES = ("qs", "ss", "wf")


def random_instance(family, n, alpha_rank, rng):
    sys = random_system(family, n, rng)
    x = random_nodes(n, rng)
    return DisplacementInstance(sys, x, rng.standard_normal((n, alpha_rank)),
                                rng.standard_normal((alpha_rank, n)))


def conditioned_instances(family, count, rng, sizes=(3, 12), ranks=(1, 3), max_cond=1e6):
    """``count`` instances whose condition estimate is at most ``max_cond``,
    with the dense matrix and its oracle inverse attached."""
    out = []
    while len(out) < count:
        n = int(rng.integers(sizes[0], sizes[1] + 1))
        a = int(rng.integers(ranks[0], ranks[1] + 1))
        inst = random_instance(family, n, a, rng)
        R = materialize(inst)
        Rinv = dense_inverse(R)
        if cond_estimate(R, Rinv) > max_cond:
            continue
        out.append((inst, R, Rinv))
    return out


def coefficient_matrix(sys):
    """``M_Q`` recovered from polynomial values only.

    ``tau_k x Q_{k-1} - Q_k`` has degree < k, so its coordinates in
    ``Q_0..Q_{k-1}`` are fixed by interpolation at ``k`` points.
    """
    n = sys.n
    pts = np.cos(np.pi * (np.arange(n) + 0.5) / n) + 1.5
    V = evaluate_system(sys, pts)
    tau = sys.tau
    M = np.eye(n)
    for k in range(1, n):
        rhs = tau[k] * pts * V[:, k - 1] - V[:, k]
        M[:k, k] = np.linalg.lstsq(V[:, :k], rhs, rcond=None)[0]
    return M


def rel(a, b):
    """Max-entry error of ``a`` relative to the size of ``b``."""
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    return float(np.abs(a - b).max() / max(np.abs(b).max(), 1e-300))
