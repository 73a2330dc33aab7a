"""Gaussian elimination with partial pivoting on displacement generators.

Each step recovers the first column and row of the current Schur complement
from its generators, pivots, and updates the generators, so no entry of
``R`` beyond the current row and column is ever formed.  Rows and columns of
``M_Q - xi N_Q`` are handled through their quasiseparable generators, which
keeps every step at O(alpha n).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.linalg import solve_triangular

from .displacement import DisplacementInstance
from .errors import SingularMatrixError
from .recurrence import (base_generators, qs_matvec, qs_solve, shift,
                         superdiagonal_tau, trailing_submatrix, ShiftedM)

PIVOT_TOL = 1e-13


@dataclass(frozen=True)
class PluFactorization:
    """``R = P @ L @ U``.

    ``perm[k]`` is the row swapped into position ``k`` at step ``k``;
    ``order`` is the resulting row order, so ``R[order] = L @ U``.
    """
    perm: np.ndarray
    order: np.ndarray
    L: np.ndarray
    U: np.ndarray
    pivoted_nodes: np.ndarray

    @property
    def n(self) -> int:
        return self.L.shape[0]

    @property
    def P(self) -> np.ndarray:
        P = np.zeros((self.n, self.n))
        P[self.order, np.arange(self.n)] = 1.0
        return P

    def reconstruct(self) -> np.ndarray:
        out = np.empty((self.n, self.n))
        out[self.order] = self.L @ self.U
        return out


@dataclass
class SchurState:
    """Generators of the Schur complement left after ``k - 1`` steps.

    ``rows`` lists the original row indices of ``R`` that the remaining
    rows came from, in their current order.
    """
    k: int
    G: np.ndarray
    B: np.ndarray
    nodes: np.ndarray
    rows: np.ndarray


def schur_states(inst: DisplacementInstance, pivot_tol: float = PIVOT_TOL):
    """Run the elimination and return the state before every step.

    Only meant for inspecting intermediate generators; :func:`gepp` is the
    production path.
    """
    states = []
    gepp(inst, pivot_tol=pivot_tol, _trace=states.append)
    return states


def gepp(inst: DisplacementInstance, pivot_tol: float | None = PIVOT_TOL,
         _trace=None) -> PluFactorization:
    """Factor ``R = P L U`` from the generators of ``inst``.

    A pivot smaller than ``pivot_tol`` times the largest column entry seen so
    far raises :class:`SingularMatrixError`.  ``pivot_tol=None`` disables the
    check; benchmarks use it to time the same operations on matrices that
    are numerically singular.
    """
    n = inst.n
    x = np.array(inst.nodes, dtype=float)
    G = np.array(inst.G, dtype=float)
    B = np.array(inst.B, dtype=float)
    base = base_generators(inst.sys)
    full = ShiftedM(base, 0.0, base, superdiagonal_tau(inst.sys))
    L = np.eye(n)
    U = np.zeros((n, n))
    order = np.arange(n)
    perm = np.zeros(n, dtype=int)
    scale = 0.0
    for k in range(n):
        if _trace is not None:
            _trace(SchurState(k + 1, G.copy(), B.copy(), x[k:].copy(), order[k:].copy()))
        col = x[k:] * (G @ B[:, 0])
        p = int(np.argmax(np.abs(col)))
        scale = max(scale, float(np.abs(col[p])))
        perm[k] = k + p
        if p:
            x[[k, k + p]] = x[[k + p, k]]
            G[[0, p]] = G[[p, 0]]
            col[[0, p]] = col[[p, 0]]
            L[[k, k + p], :k] = L[[k + p, k], :k]
            order[[k, k + p]] = order[[k + p, k]]
        d = col[0]
        if pivot_tol is not None and (d == 0.0 or abs(d) < pivot_tol * scale):
            raise SingularMatrixError(
                f"pivot {d:.3e} below tolerance at step {k + 1}", step=k + 1)
        xk = x[k]
        g1 = G[0]
        trail = trailing_submatrix(full, k + 1)
        rhs = qs_matvec(trail, xk * (g1 @ B))
        row = qs_solve(shift(trail.base, trail.nsup, xk), rhs)
        U[k, k:] = row
        L[k + 1:, k] = col[1:] / d
        G = G[1:] - np.outer(col[1:] / d, g1)
        B = B[:, 1:] - np.outer(B[:, 0], row[1:] / d)
    return PluFactorization(perm, order, L, U, x)


def solve(fact: PluFactorization, rhs, check: bool = True) -> np.ndarray:
    """``R y = rhs`` for a vector or a block of columns."""
    rhs = np.asarray(rhs, dtype=float)
    if check:
        _check_u(fact)
    z = solve_triangular(fact.L, rhs[fact.order], lower=True, unit_diagonal=True,
                         check_finite=False)
    return solve_triangular(fact.U, z, lower=False, check_finite=False)


def solve_transposed(fact: PluFactorization, rhs, check: bool = True) -> np.ndarray:
    """``R^T y = rhs`` for a vector or a block of columns."""
    rhs = np.asarray(rhs, dtype=float)
    if check:
        _check_u(fact)
    w = solve_triangular(fact.U, rhs, trans="T", lower=False, check_finite=False)
    z = solve_triangular(fact.L, w, trans="T", lower=True, unit_diagonal=True,
                         check_finite=False)
    y = np.empty_like(z)
    y[fact.order] = z
    return y


def _check_u(fact):
    if np.any(np.diag(fact.U) == 0.0):
        raise SingularMatrixError("U has a zero diagonal entry")
