"""Vandermonde-like matrices given by ``D_{1/x} R - R W_Q = G B``."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.linalg import solve_triangular

from .poly_systems import PolySystem, check_nodes
from .recurrence import build_mn, base_generators, qs_solve


@dataclass(frozen=True, eq=False)
class DisplacementInstance:
    sys: PolySystem
    nodes: np.ndarray
    G: np.ndarray
    B: np.ndarray
    distinct_nodes: bool = True

    def __post_init__(self):
        nodes = check_nodes(self.nodes, distinct=self.distinct_nodes)
        G = np.array(self.G, dtype=float)
        B = np.array(self.B, dtype=float)
        n = self.sys.n
        if G.ndim == 1:
            G = G[:, None]
        if B.ndim == 1:
            B = B[None, :]
        if nodes.size != n:
            raise ValueError(f"{nodes.size} nodes for a system of size {n}")
        if G.shape[0] != n or B.shape[1] != n or G.shape[1] != B.shape[0]:
            raise ValueError(f"generator shapes {G.shape} and {B.shape} do not fit n={n}")
        if G.shape[1] < 1:
            raise ValueError("displacement rank must be at least 1")
        for arr in (nodes, G, B):
            arr.setflags(write=False)
        object.__setattr__(self, "nodes", nodes)
        object.__setattr__(self, "G", G)
        object.__setattr__(self, "B", B)

    @property
    def n(self) -> int:
        return self.sys.n

    @property
    def alpha_rank(self) -> int:
        return self.G.shape[1]


def wq_dense(sys: PolySystem) -> np.ndarray:
    """``W_Q = N_Q M_Q^{-1}`` (strictly upper triangular)."""
    mn = build_mn(sys)
    # W M = N  <=>  M^T W^T = N^T
    return solve_triangular(mn.mq, mn.nq.T, trans="T", lower=False).T


def materialize(inst: DisplacementInstance) -> np.ndarray:
    """Dense ``R`` by a column sweep; column j only needs columns < j since
    ``W_Q`` is strictly upper triangular."""
    W = wq_dense(inst.sys)
    x = inst.nodes
    GB = inst.G @ inst.B
    R = np.zeros_like(GB)
    for j in range(inst.n):
        R[:, j] = x * (GB[:, j] + R[:, :j] @ W[:j, j])
    return R


def canonical_vq_generators(sys: PolySystem, nodes) -> DisplacementInstance:
    """Rank-one generators whose displacement solution is ``V_Q(x)``."""
    x = check_nodes(nodes)
    e1 = np.zeros(sys.n)
    e1[0] = 1.0
    first_row = qs_solve(base_generators(sys), e1)
    return DisplacementInstance(sys, x, (1.0 / x)[:, None], sys.tau0 * first_row[None, :])


def displacement_residual(inst: DisplacementInstance, R) -> float:
    R = np.asarray(R, dtype=float)
    if R.shape != (inst.n, inst.n):
        raise ValueError(f"R has shape {R.shape}, expected {(inst.n, inst.n)}")
    W = wq_dense(inst.sys)
    res = R / inst.nodes[:, None] - R @ W - inst.G @ inst.B
    return float(np.abs(res).sum(axis=1).max())
