"""Generalized associated (Horner) polynomials and family embeddings.

The associated system of an n-term system ``Q`` is defined through an
(n+1)-th polynomial ``Q_n``, which the source system does not determine.
Any choice works for inversion; :class:`Extension` pins the generators at
index ``n`` that select it.  The defaults make ``Q_n = x Q_{n-1}`` plus a
``beta_n G_{n-1}`` coupling that only feeds the unused auxiliary ``G_n``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import InvalidSystemError
from .poly_systems import PolyFamily, PolySystem


@dataclass(frozen=True)
class Extension:
    alpha: float = 1.0
    beta: float = 1.0
    gamma: float = 0.0
    delta: float = 1.0
    theta: float = 0.0


DEFAULT_EXTENSION = Extension()


@dataclass(frozen=True)
class HornerSystem:
    hat: PolySystem
    source_n: int


def _require(sys, family):
    if sys.family is not PolyFamily(family):
        raise InvalidSystemError(
            f"expected a {PolyFamily(family).value} system, got {sys.family.value}")


def _extended(sys: PolySystem, ext: Extension):
    """Generator arrays of length n+1 with the extension written into slot n."""
    out = {}
    for name in ("alpha", "beta", "gamma", "delta", "theta"):
        arr = np.empty(sys.n + 1)
        arr[:-1] = getattr(sys, name)
        arr[-1] = getattr(ext, name)
        out[name] = arr
    return out


def extend(sys: PolySystem, ext: Extension = DEFAULT_EXTENSION) -> PolySystem:
    """The (n+1)-term system ``Q_0..Q_n`` whose last step uses ``ext``."""
    return PolySystem(family=sys.family, tau0=sys.tau0, **_extended(sys, ext))


def hat_tau0(sys: PolySystem) -> float:
    """``Q̂_0``.  Its scale cancels in the inversion formula; we fix it at 1."""
    return 1.0


def hat_qs(sys: PolySystem, ext: Extension = DEFAULT_EXTENSION) -> HornerSystem:
    _require(sys, "qs")
    n = sys.n
    e = _extended(sys, ext)
    a, b, c, d, t = e["alpha"], e["beta"], e["gamma"], e["delta"], e["theta"]
    k = np.arange(1, n)
    out = {name: np.zeros(n) for name in ("alpha", "beta", "gamma", "delta", "theta")}
    out["alpha"][1:] = a[n - k + 1]
    out["beta"][1:] = c[n - k + 1] / d[n - k + 1]
    out["gamma"][1:] = b[n - k + 1] * d[n - k]
    out["delta"][1:] = d[n - k]
    out["theta"][1:] = d[n - k] / d[n - k + 1] * t[n - k + 1]
    return HornerSystem(PolySystem(family="qs", tau0=hat_tau0(sys), **out), n)


def hat_ss(sys: PolySystem, ext: Extension = DEFAULT_EXTENSION) -> HornerSystem:
    _require(sys, "ss")
    n = sys.n
    e = _extended(sys, ext)
    a, b, c, d, t = e["alpha"], e["beta"], e["gamma"], e["delta"], e["theta"]
    k = np.arange(1, n)
    out = {name: np.zeros(n) for name in ("alpha", "beta", "gamma", "delta", "theta")}
    out["alpha"][1:] = a[n - k]
    out["beta"][1:] = c[n - k] / d[n - k]
    out["gamma"][1:] = b[n - k] * d[n - k]
    out["delta"][1:] = d[n - k]
    out["theta"][1:] = d[n - k] / d[n - k + 1] * t[n - k + 1]
    # G^_0 = beta^_0 Q^_0 reproduces the a^_{0k} coefficients
    out["beta"][0] = c[n] / d[n]
    return HornerSystem(PolySystem(family="ss", tau0=hat_tau0(sys), **out), n)


def hat_wf(sys: PolySystem, ext: Extension = DEFAULT_EXTENSION) -> HornerSystem:
    """Associated system of a QS source as a three-term (well-free) system.

    Needs ``beta_k != 0`` for ``k = 2..n``.  The index ``n+1`` generator
    ``alpha_{n+1}`` is taken as 0, which makes ``beta^_1 = 0`` as the
    well-free convention requires.
    """
    _require(sys, "qs")
    n = sys.n
    e = _extended(sys, ext)
    a, b, c, d, t = e["alpha"], e["beta"], e["gamma"], e["delta"], e["theta"]
    if n > 2 and np.any(b[2:] == 0.0):
        k = 2 + int(np.flatnonzero(b[2:] == 0.0)[0])
        raise InvalidSystemError(f"well-free Horner route needs beta_{k} != 0")
    alpha = np.ones(n)
    beta = np.zeros(n)
    gamma = np.zeros(n)
    delta = np.zeros(n)
    if n > 1:
        alpha[1] = d[n - 1]
        delta[1] = -d[n - 1] / d[n] * t[n]
    for k in range(2, n):
        p = n - k
        ratio = b[p + 1] / b[p + 2]
        alpha[k] = d[p]
        beta[k] = d[p] * a[p + 2] * ratio
        delta[k] = -d[p] / d[p + 1] * (t[p + 1] + a[p + 2] * ratio)
        gamma[k] = d[p] / d[p + 2] * ratio * (t[p + 2] * a[p + 2] - b[p + 2] * c[p + 2])
    hat = PolySystem(family="wf", tau0=hat_tau0(sys), alpha=alpha, beta=beta,
                     gamma=gamma, delta=delta, theta=np.zeros(n))
    return HornerSystem(hat, n)


def ss_to_qs(sys: PolySystem) -> PolySystem:
    """Rewrite a semiseparable system as a quasiseparable one with G~_k = G_{k-1}."""
    _require(sys, "ss")
    n = sys.n
    a, b, c, d, t = sys.alpha, sys.beta, sys.gamma, sys.delta, sys.theta
    cc = a - b * c
    out = {name: np.zeros(n) for name in ("alpha", "beta", "gamma", "delta", "theta")}
    out["alpha"][2:] = cc[1:-1]
    out["beta"][1:] = b[:-1]
    out["gamma"][2:] = c[2:] * cc[1:-1]
    out["delta"][1:] = d[1:]
    out["theta"][1:] = t[1:] + c[1:] * b[:-1]
    return PolySystem(family="qs", tau0=sys.tau0, **out)


def wf_to_qs(sys: PolySystem) -> PolySystem:
    """Rewrite a well-free system as a quasiseparable one.

    ``alpha~_{n-1}`` and ``beta~_{n-1}`` only feed ``G~_{n-1}``, which no
    polynomial of the n-term system reads; they are set to 1.
    """
    _require(sys, "wf")
    n = sys.n
    a, b, c, d = sys.alpha, sys.beta, sys.gamma, sys.delta
    out = {name: np.zeros(n) for name in ("alpha", "beta", "gamma", "delta", "theta")}
    if n == 1:
        return PolySystem(family="qs", tau0=sys.tau0, **out)
    e = np.zeros(n)
    e[1] = d[1] / a[1]
    for m in range(2, n):
        e[m] = d[m] / a[m] + b[m] / (a[m - 1] * a[m])
    out["delta"][1:] = a[1:]
    out["gamma"][1:] = a[1:]
    out["theta"][1] = -d[1]
    out["theta"][2:] = -(d[2:] + b[2:] / a[1:-1])
    out["alpha"][1:-1] = b[2:] / a[2:]
    out["beta"][1:-1] = -(e[1:-1] * b[2:] + c[2:]) / a[2:]
    out["alpha"][-1] = 1.0
    out["beta"][-1] = 1.0
    return PolySystem(family="qs", tau0=sys.tau0, **out)


def horner_system(sys: PolySystem, route: str = "auto",
                  ext: Extension = DEFAULT_EXTENSION) -> HornerSystem:
    """Associated system used by the inversion algorithm.

    ``route="auto"`` picks the family's own rule (well-free sources go
    through :func:`wf_to_qs`); ``route="wf"`` forces the three-term rule of
    :func:`hat_wf` for QS and WF sources.
    """
    fam = sys.family
    if route == "auto":
        if fam is PolyFamily.QS:
            return hat_qs(sys, ext)
        if fam is PolyFamily.SS:
            return hat_ss(sys, ext)
        return hat_qs(wf_to_qs(sys), ext)
    if route == "wf":
        if fam is PolyFamily.QS:
            return hat_wf(sys, ext)
        if fam is PolyFamily.WF:
            return hat_wf(wf_to_qs(sys), ext)
        raise InvalidSystemError("the well-free Horner route needs a QS or WF source")
    raise ValueError(f"unknown Horner route {route!r}")


def dense_hat_coefficients(tau: np.ndarray, mq: np.ndarray):
    """Associated-system coefficients straight from ``tau^_k = tau_{n-k}`` and
    ``a^_{jk} = tau_{n-k}/tau_{n-j} a_{n-k,n-j}``.

    ``tau`` and ``mq`` describe an (n+1)-term system (index n included);
    returns ``(tau_hat, M_hat)`` for the n-term associated system, with
    ``tau_hat[0]`` left at ``tau_n``.
    """
    n = tau.size - 1
    th = tau[n - np.arange(n)]
    mh = np.eye(n)
    for k in range(1, n):
        for j in range(k):
            mh[j, k] = tau[n - k] / tau[n - j] * mq[n - k, n - j]
    return th, mh
