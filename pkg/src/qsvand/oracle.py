"""Dense, structure-ignoring O(n^3) reference routines.

These are only for verification.  Pivot ties go to the smallest row index,
the same rule as the fast elimination, so factors compare entry by entry.
"""

import numpy as np

from .errors import SingularMatrixError


def dense_gepp(A):
    """``A = P @ L @ U`` by textbook partial pivoting."""
    U = np.array(A, dtype=float)
    n = U.shape[0]
    if U.shape != (n, n):
        raise ValueError("dense_gepp needs a square matrix")
    L = np.eye(n)
    order = np.arange(n)
    for k in range(n):
        m = k + int(np.argmax(np.abs(U[k:, k])))
        if U[m, k] == 0.0:
            raise SingularMatrixError(f"zero pivot at step {k + 1}", step=k + 1)
        if m != k:
            U[[k, m], k:] = U[[m, k], k:]
            L[[k, m], :k] = L[[m, k], :k]
            order[[k, m]] = order[[m, k]]
        L[k + 1:, k] = U[k + 1:, k] / U[k, k]
        U[k + 1:, k:] -= np.outer(L[k + 1:, k], U[k, k:])
        U[k + 1:, k] = 0.0
    P = np.zeros((n, n))
    P[order, np.arange(n)] = 1.0
    return P, L, U


def _lu_solve(P, L, U, b):
    y = P.T @ b
    for i in range(len(y)):
        y[i] -= L[i, :i] @ y[:i]
    for i in reversed(range(len(y))):
        y[i] = (y[i] - U[i, i + 1:] @ y[i + 1:]) / U[i, i]
    return y


def dense_solve(A, b):
    P, L, U = dense_gepp(A)
    b = np.array(b, dtype=float)
    if b.ndim == 1:
        return _lu_solve(P, L, U, b)
    return np.column_stack([_lu_solve(P, L, U, col) for col in b.T])


def dense_inverse(A):
    """Gauss-Jordan elimination with partial pivoting on ``[A | I]``."""
    A = np.array(A, dtype=float)
    n = A.shape[0]
    aug = np.hstack([A, np.eye(n)])
    for k in range(n):
        m = k + int(np.argmax(np.abs(aug[k:, k])))
        if aug[m, k] == 0.0:
            raise SingularMatrixError(f"zero pivot at step {k + 1}", step=k + 1)
        if m != k:
            aug[[k, m]] = aug[[m, k]]
        aug[k] /= aug[k, k]
        col = aug[:, k].copy()
        col[k] = 0.0
        aug -= np.outer(col, aug[k])
    return aug[:, n:]


def dense_matmul(A, B):
    return np.asarray(A, dtype=float) @ np.asarray(B, dtype=float)


def matrix_power_sum(W, d):
    """``sum_k d_k W^{k-1}`` by Horner's rule on matrices."""
    W = np.asarray(W, dtype=float)
    n = W.shape[0]
    out = np.zeros_like(W)
    for dk in reversed(np.asarray(d, dtype=float)):
        out = out @ W + dk * np.eye(n)
    return out


def cond_estimate(A, Ainv=None):
    """``||A||_inf ||A^{-1}||_inf``."""
    A = np.asarray(A, dtype=float)
    if Ainv is None:
        Ainv = dense_inverse(A)
    return float(np.abs(A).sum(axis=1).max() * np.abs(Ainv).sum(axis=1).max())
