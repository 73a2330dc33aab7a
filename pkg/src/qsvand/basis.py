"""Basis transformation ``S_PQ``: column j holds the monomial coefficients of Q_j."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.linalg import solve_triangular

from .errors import SingularBasisError
from .poly_systems import PolyFamily, PolySystem


@dataclass(frozen=True)
class BasisMatrix:
    S: np.ndarray
    T: np.ndarray | None = None

    @property
    def n(self) -> int:
        return self.S.shape[0]


def _xshift(v):
    """Coefficients of ``x * p(x)`` truncated to the same length."""
    out = np.zeros_like(v)
    out[1:] = v[:-1]
    return out


def spq_qs(sys: PolySystem) -> BasisMatrix:
    n = sys.n
    S = np.zeros((n, n))
    T = np.zeros((n, n))
    S[0, 0] = sys.tau0
    a, b, c, d, t = sys.alpha, sys.beta, sys.gamma, sys.delta, sys.theta
    for k in range(1, n):
        s, tk = S[:, k - 1], T[:, k - 1]
        T[:, k] = a[k] * tk + b[k] * s
        S[:, k] = c[k] * tk + d[k] * _xshift(s) + t[k] * s
    return BasisMatrix(S, T)


def spq_ss(sys: PolySystem) -> BasisMatrix:
    n = sys.n
    S = np.zeros((n, n))
    T = np.zeros((n, n))
    S[0, 0] = sys.tau0
    T[0, 0] = sys.beta[0] * sys.tau0
    a, b, c, d, t = sys.alpha, sys.beta, sys.gamma, sys.delta, sys.theta
    for k in range(1, n):
        s, tk = S[:, k - 1], T[:, k - 1]
        lin = d[k] * _xshift(s) + t[k] * s
        T[:, k] = a[k] * tk + b[k] * lin
        S[:, k] = c[k] * tk + lin
    return BasisMatrix(S, T)


def spq_wf(sys: PolySystem) -> BasisMatrix:
    n = sys.n
    S = np.zeros((n, n))
    S[0, 0] = sys.tau0
    a, b, c, d = sys.alpha, sys.beta, sys.gamma, sys.delta
    for k in range(1, n):
        s = S[:, k - 1]
        col = a[k] * _xshift(s) - d[k] * s
        if k >= 2:
            p = S[:, k - 2]
            col -= b[k] * _xshift(p) + c[k] * p
        S[:, k] = col
    return BasisMatrix(S)


def spq(sys: PolySystem) -> BasisMatrix:
    if sys.family is PolyFamily.QS:
        return spq_qs(sys)
    if sys.family is PolyFamily.SS:
        return spq_ss(sys)
    return spq_wf(sys)


def _check(S):
    diag = np.diag(S)
    if np.any(diag == 0.0) or not np.all(np.isfinite(diag)):
        raise SingularBasisError("basis matrix has a zero diagonal entry")


def back_substitute(basis, rhs, check: bool = True) -> np.ndarray:
    """Row vector(s) ``v`` with ``v @ S = rhs``."""
    S = basis.S if isinstance(basis, BasisMatrix) else np.asarray(basis)
    if check:
        _check(S)
    rhs = np.asarray(rhs, dtype=float)
    return solve_triangular(S, rhs.T, trans="T", lower=False,
                            check_finite=False).T


def solve_columns(basis, rhs) -> np.ndarray:
    """Column vector(s) ``w`` with ``S @ w = rhs``."""
    S = basis.S if isinstance(basis, BasisMatrix) else np.asarray(basis)
    _check(S)
    return solve_triangular(S, np.asarray(rhs, dtype=float), lower=False,
                            check_finite=False)
