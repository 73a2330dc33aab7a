"""Random systems, nodes and instances with the distributions used by the
tests and the ``gen`` command."""

from __future__ import annotations

import numpy as np

from .poly_systems import PolyFamily, PolySystem, make_system


def random_system(family, n: int, rng: np.random.Generator, tau0: float = 1.0) -> PolySystem:
    """alpha, delta ~ U[0.5, 1.5]; beta, gamma, theta ~ U[-0.5, 0.5]."""
    family = PolyFamily(family)
    alpha = rng.uniform(0.5, 1.5, n)
    delta = rng.uniform(0.5, 1.5, n)
    beta, gamma, theta = (rng.uniform(-0.5, 0.5, n) for _ in range(3))
    for arr in (alpha, beta, gamma, delta, theta):
        arr[0] = 0.0
    if family is PolyFamily.WF:
        alpha[0] = 1.0
        theta[:] = 0.0
        if n > 1:
            beta[1] = 0.0
    elif family is PolyFamily.SS:
        beta[0] = 1.0
    return make_system(family, n, tau0=tau0, alpha=alpha, beta=beta,
                       gamma=gamma, delta=delta, theta=theta)


def random_nodes(n: int, rng: np.random.Generator, low: float = 0.3,
                 high: float = 2.0, gap: float = 1e-3) -> np.ndarray:
    """Uniform nodes on [low, high] with pairwise gaps of at least ``gap``."""
    out = []
    while len(out) < n:
        x = rng.uniform(low, high)
        if all(abs(x - y) >= gap for y in out):
            out.append(x)
    return np.array(out)
