"""Inversion of Vandermonde-like matrices in O(alpha n^2).

The inverse is assembled from one structured factorization of ``R`` and the
associated (Horner) system ``Q^``::

    R^{-1} = I~ sum_i (sum_k d_ik (W_Q^^T)^{k-1}) V_Q^^T diag(c_i)

where ``c = D_x R^{-T} B^T`` and ``[d_ik] = G^T R^{-T} I~ S_PQ^^{-1}``.  The
matrix ``I~`` is the reversal permutation.  Each sum over powers of ``W_Q^``
is evaluated without forming ``W_Q^`` through

    V_Q (sum_k d_k W_Q^{k-1}) = (sum_k d_k D_{1/x}^{k-1}) V_Q - V_F S_PQ

with ``V_F[i, j] = F_j(1/x_i)`` for the backward recurrence
``F_{n-1} = 0``, ``F_k(y) = y (F_{k+1}(y) + d_{k+2})``.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .basis import BasisMatrix, back_substitute, spq
from .displacement import DisplacementInstance, materialize
from .gepp import PIVOT_TOL, PluFactorization, gepp, solve, solve_transposed
from .horner import DEFAULT_EXTENSION, Extension, HornerSystem, horner_system
from .poly_systems import PolyFamily, PolySystem, check_nodes, evaluate_system

#: ``I~`` in the inversion formula.  ``"identity"`` is kept only so the choice
#: can be checked against the alternative.
TILDE_I = "reversal"


@dataclass(frozen=True)
class InverseResult:
    Rinv: np.ndarray
    residual_report: dict = field(default_factory=dict)
    factorization: PluFactorization | None = None
    horner: HornerSystem | None = None


def _as_rows(d, n):
    d = np.asarray(d, dtype=float)
    single = d.ndim == 1
    d = np.atleast_2d(d)
    if d.shape[1] != n:
        raise ValueError(f"coefficient rows have length {d.shape[1]}, expected {n}")
    return d, single


def build_vf(nodes, d) -> np.ndarray:
    """``V_F[i, j] = F_j(1/x_i)``; the last column is identically zero.

    ``d`` holds ``d_1..d_n``; only ``d_2..d_n`` enter.  A 2-d ``d`` gives a
    stack of matrices, one per row.
    """
    x = check_nodes(nodes, distinct=False)
    n = x.size
    d, single = _as_rows(d, n)
    y = 1.0 / x
    out = np.zeros((d.shape[0], n, n))
    for k in range(n - 2, -1, -1):
        out[:, :, k] = y * (out[:, :, k + 1] + d[:, k + 1][:, None])
    return out[0] if single else out


def power_sum_diagonal(nodes, d) -> np.ndarray:
    """``sum_k d_k x_i^{-(k-1)}`` for every node, by Horner's rule."""
    x = check_nodes(nodes, distinct=False)
    d, single = _as_rows(d, x.size)
    y = 1.0 / x
    acc = np.zeros((d.shape[0], x.size))
    for k in range(x.size - 1, -1, -1):
        acc = acc * y + d[:, k][:, None]
    return acc[0] if single else acc


def vf_times_basis(sys: PolySystem, nodes, d, basis: BasisMatrix | None = None) -> np.ndarray:
    """``V_F S_PQ`` column by column, following the recurrence of ``S_PQ``.

    Every ``V_F Z_0 s`` is replaced by ``D_x V_F s - 1 (d' . s)`` with
    ``d' = [d_2, ..., d_n, 0]``, so each column costs O(n).
    """
    x = check_nodes(nodes, distinct=False)
    n = sys.n
    if x.size != n:
        raise ValueError(f"{x.size} nodes for a system of size {n}")
    d, single = _as_rows(d, n)
    if basis is None:
        basis = spq(sys)
    S = basis.S
    dp = np.zeros_like(d)
    dp[:, :-1] = d[:, 1:]
    dps = dp @ S          # (m, n): d' . s_j for every column j
    m = d.shape[0]
    vf0 = build_vf(x, d if not single else d[0])
    vf0 = vf0.reshape(m, n, n)[:, :, 0]
    out = np.zeros((m, n, n))
    out[:, :, 0] = sys.tau0 * vf0

    def zshift(j):
        # V_F Z_0 s_j
        return x * out[:, :, j] - dps[:, j][:, None]

    a, b, c, dl, t = sys.alpha, sys.beta, sys.gamma, sys.delta, sys.theta
    fam = sys.family
    if fam is PolyFamily.QS:
        vt = np.zeros((m, n))
        for k in range(1, n):
            vs = out[:, :, k - 1]
            out[:, :, k] = c[k] * vt + dl[k] * zshift(k - 1) + t[k] * vs
            vt = a[k] * vt + b[k] * vs
    elif fam is PolyFamily.SS:
        vt = b[0] * out[:, :, 0]
        for k in range(1, n):
            lin = dl[k] * zshift(k - 1) + t[k] * out[:, :, k - 1]
            out[:, :, k] = c[k] * vt + lin
            vt = a[k] * vt + b[k] * lin
    else:
        for k in range(1, n):
            col = a[k] * zshift(k - 1) - dl[k] * out[:, :, k - 1]
            if k >= 2:
                col -= b[k] * zshift(k - 2) + c[k] * out[:, :, k - 2]
            out[:, :, k] = col
    return out[0] if single else out


def fast_sum_product(sys: PolySystem, nodes, d, basis: BasisMatrix | None = None,
                     vq: np.ndarray | None = None) -> np.ndarray:
    """``V_Q(x) @ sum_k d_k W_Q^{k-1}`` in O(n^2) without forming ``W_Q``.

    ``d`` may be a single coefficient row or a stack of rows.
    """
    x = check_nodes(nodes, distinct=False)
    if vq is None:
        vq = evaluate_system(sys, x)
    diag = power_sum_diagonal(x, d)
    vfs = vf_times_basis(sys, x, d, basis)
    return diag[..., :, None] * vq - vfs


def tilde_i(n: int, kind: str = TILDE_I) -> np.ndarray:
    if kind == "reversal":
        return np.eye(n)[::-1].copy()
    if kind == "identity":
        return np.eye(n)
    raise ValueError(f"unknown I~ convention {kind!r}")


def _apply_tilde(A, kind):
    """``I~ A`` for a matrix or ``A I~`` along the last axis of row stacks."""
    if kind == "reversal":
        return A[..., ::-1]
    if kind == "identity":
        return A
    raise ValueError(f"unknown I~ convention {kind!r}")


def cidik(inst: DisplacementInstance, fact: PluFactorization, S_hat: BasisMatrix,
          tilde: str = TILDE_I, check: bool = True):
    """``c = D_x R^{-T} B^T`` (n x alpha) and ``[d_ik]`` (alpha x n) with
    ``[d_ik] S_PQ^ = G^T R^{-T} I~``."""
    x = inst.nodes
    c = x[:, None] * solve_transposed(fact, inst.B.T, check)
    wm = solve(fact, inst.G, check).T
    dmat = back_substitute(S_hat, _apply_tilde(wm, tilde), check)
    return c, dmat


def invert(inst: DisplacementInstance, route: str = "auto",
           ext: Extension = DEFAULT_EXTENSION, hat: HornerSystem | None = None,
           tilde: str = TILDE_I, report: bool = True,
           fact: PluFactorization | None = None,
           pivot_tol: float | None = PIVOT_TOL) -> InverseResult:
    """Fast inverse of the matrix defined by ``inst``.

    With ``report=True`` the dense ``R`` is materialized to record
    ``||R R^{-1} - I||`` and ``||R^{-1} R - I||`` (infinity norms); that part
    is O(n^3) and is skipped for timing runs.  ``pivot_tol=None`` turns off
    every singularity check (see :func:`qsvand.gepp.gepp`).
    """
    n = inst.n
    if hat is None:
        hat = horner_system(inst.sys, route=route, ext=ext)
    if fact is None:
        fact = gepp(inst, pivot_tol=pivot_tol)
    S_hat = spq(hat.hat)
    c, dmat = cidik(inst, fact, S_hat, tilde, check=pivot_tol is not None)
    A = fast_sum_product(hat.hat, inst.nodes, dmat, basis=S_hat)
    # sum_i A_i^T diag(c_i): entry (r, s) = sum_i A_i[s, r] c_i[s]
    acc = np.einsum("isr,si->rs", A, c)
    if tilde == "reversal":
        Rinv = acc[::-1].copy()
    else:
        Rinv = tilde_i(n, tilde) @ acc
    rep = {}
    if report:
        R = materialize(inst)
        eye = np.eye(n)
        rep = {
            "right": float(np.abs(R @ Rinv - eye).sum(axis=1).max()),
            "left": float(np.abs(Rinv @ R - eye).sum(axis=1).max()),
        }
    return InverseResult(Rinv, rep, fact, hat)
