"""Recurrence matrices ``M_Q``, ``N_Q`` and their quasiseparable generators.

A system obeying ``Q_k = tau_k x Q_{k-1} - sum_{j<k} a_{jk} Q_j`` is encoded by
the unit upper-triangular ``M_Q = [a_{jk}]`` and the superdiagonal
``N_Q = [tau_k]``.  For the three recurrence families ``M_Q`` (and every
``M_Q - xi N_Q``) is upper triangular 2-quasiseparable, so products and
solves against it cost O(n).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _kernels
from .poly_systems import PolyFamily, PolySystem


@dataclass(frozen=True)
class RecurrenceMatrices:
    mq: np.ndarray
    nq: np.ndarray


@dataclass(frozen=True)
class QsUpperGenerators:
    """Generators of an upper-triangular 2-quasiseparable matrix.

    All arrays have leading dimension ``n``; ``g[n-1]``, ``b[0]`` and ``h[0]``
    are never read.
    """
    d: np.ndarray
    g: np.ndarray
    b: np.ndarray
    h: np.ndarray

    @property
    def n(self) -> int:
        return self.d.shape[0]

    def dense(self) -> np.ndarray:
        return _kernels.dense_from_generators(self.d, self.g, self.b, self.h)


@dataclass(frozen=True)
class ShiftedM:
    """``M_Q - xi N_Q`` in generator form, together with the unshifted base."""
    gens: QsUpperGenerators
    xi: float
    base: QsUpperGenerators
    nsup: np.ndarray

    @property
    def n(self) -> int:
        return self.gens.n

    def dense(self) -> np.ndarray:
        return self.gens.dense()


def superdiagonal_tau(sys: PolySystem) -> np.ndarray:
    """``nsup[r] = tau_{r+1}``, the (r, r+1) entry of ``N_Q``; last slot is 0."""
    n = sys.n
    out = np.zeros(n)
    out[:-1] = sys.tau[1:]
    return out


def build_mn(sys: PolySystem) -> RecurrenceMatrices:
    """Dense ``M_Q`` and ``N_Q`` from the closed-form ``a_{jk}`` of each family."""
    n = sys.n
    a, b, c, d, t = sys.alpha, sys.beta, sys.gamma, sys.delta, sys.theta
    M = np.eye(n)
    N = np.zeros((n, n))
    idx = np.arange(n - 1)
    N[idx, idx + 1] = superdiagonal_tau(sys)[:-1]
    fam = sys.family
    if fam is PolyFamily.QS:
        for k in range(1, n):
            M[k - 1, k] = -t[k]
        for j in range(n - 2):
            prod = 1.0
            for k in range(j + 2, n):
                M[j, k] = -b[j + 1] * prod * c[k]
                prod *= a[k]
    elif fam is PolyFamily.SS:
        cc = a - b * c
        for k in range(1, n):
            M[k - 1, k] = -(t[k] + c[k] * b[k - 1])
        for j in range(n - 2):
            prod = cc[j + 1]
            for k in range(j + 2, n):
                M[j, k] = -b[j] * prod * c[k]
                prod *= cc[k]
    else:
        M[0, 1:2] = d[1:2]
        for k in range(2, n):
            M[k - 1, k] = d[k] + b[k] / a[k - 1]
        e = _wf_e(sys)
        for j in range(n - 2):
            head = (e[j + 1] * b[j + 2] + c[j + 2]) / a[j + 2]
            prod = 1.0
            for k in range(j + 2, n):
                M[j, k] = a[k] * head * prod
                if k + 1 < n:
                    prod *= b[k + 1] / a[k + 1]
    return RecurrenceMatrices(M, N)


def _wf_e(sys: PolySystem) -> np.ndarray:
    """``e_m = delta_m/alpha_m + beta_m/(alpha_{m-1} alpha_m)`` with alpha_0 = 1, beta_1 = 0."""
    a, b, d = sys.alpha, sys.beta, sys.delta
    n = sys.n
    e = np.zeros(n)
    if n > 1:
        e[1] = d[1] / a[1]
    for m in range(2, n):
        e[m] = d[m] / a[m] + b[m] / (a[m - 1] * a[m])
    return e


def base_generators(sys: PolySystem) -> QsUpperGenerators:
    """Generators of ``M_Q`` itself (``xi = 0``)."""
    n = sys.n
    a, b, c, d, t = sys.alpha, sys.beta, sys.gamma, sys.delta, sys.theta
    dd = np.ones(n)
    g = np.zeros((n, 2))
    bb = np.zeros((n, 2, 2))
    h = np.zeros((n, 2))
    h[1:, 0] = 1.0
    fam = sys.family
    if fam is PolyFamily.QS:
        g[:-1, 0] = -t[1:]
        g[:-1, 1] = -b[1:]
        bb[1:-1, 1, 0] = c[2:]
        bb[1:-1, 1, 1] = a[2:]
    elif fam is PolyFamily.SS:
        cc = a - b * c
        g[:-1, 0] = -(t[1:] + c[1:] * b[:-1])
        g[:-1, 1] = -b[:-1]
        bb[1:-1, 1, 0] = c[2:] * cc[1:-1]
        bb[1:-1, 1, 1] = cc[1:-1]
    else:
        t0 = np.zeros(n)
        if n > 1:
            t0[1] = d[1]
        t0[2:] = d[2:] + b[2:] / a[1:-1]
        g[:-1, 0] = t0[1:]
        # the second component stays at its unshifted value under any xi
        g[:-2, 1] = t0[1:-1] * b[2:] / a[1:-1] + c[2:]
        bb[1:-1, 1, 0] = 1.0
        bb[1:-2, 1, 1] = b[3:] / a[2:-1]
    return QsUpperGenerators(dd, g, bb, h)


def shifted_generators(sys: PolySystem, xi: float) -> ShiftedM:
    base = base_generators(sys)
    return shift(base, superdiagonal_tau(sys), xi)


def shift(base: QsUpperGenerators, nsup: np.ndarray, xi: float) -> ShiftedM:
    """Subtract ``xi`` times the superdiagonal ``nsup`` from ``base``."""
    xi = float(xi)
    if xi == 0.0:
        return ShiftedM(base, 0.0, base, nsup)
    g = base.g.copy()
    g[:, 0] -= xi * nsup
    return ShiftedM(QsUpperGenerators(base.d, g, base.b, base.h), xi, base, nsup)


def trailing_submatrix(m: ShiftedM, k: int) -> ShiftedM:
    """Generators of the trailing block obtained by deleting the first ``k-1``
    rows and columns (``k`` is 1-based, as in ``M^{(k)}``)."""
    if not 1 <= k <= m.n:
        raise IndexError(f"trailing index {k} outside 1..{m.n}")
    s = k - 1

    def cut(gen):
        return QsUpperGenerators(gen.d[s:], gen.g[s:], gen.b[s:], gen.h[s:])

    return ShiftedM(cut(m.gens), m.xi, cut(m.base), m.nsup[s:])


def _gens(m) -> QsUpperGenerators:
    return m.gens if isinstance(m, ShiftedM) else m


def qs_matvec(m, v) -> np.ndarray:
    """Row-vector product ``v @ M`` in O(n)."""
    gen = _gens(m)
    v = np.ascontiguousarray(v, dtype=float)
    if v.shape != (gen.n,):
        raise ValueError(f"vector of length {v.shape} does not match n={gen.n}")
    return _kernels.rowvec_times(gen.d, gen.g, gen.b, gen.h, v)


def qs_solve(m, rhs) -> np.ndarray:
    """Solve ``v @ M = rhs`` for the row vector ``v`` in O(n)."""
    gen = _gens(m)
    rhs = np.ascontiguousarray(rhs, dtype=float)
    if rhs.shape != (gen.n,):
        raise ValueError(f"vector of length {rhs.shape} does not match n={gen.n}")
    return _kernels.rowvec_solve(gen.d, gen.g, gen.b, gen.h, rhs)
