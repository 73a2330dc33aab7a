"""Polynomial systems defined by quasiseparable, semiseparable and well-free
recurrences.

Every system stores five generator sequences ``alpha, beta, gamma, delta,
theta`` as float arrays of length ``n``.  Slot ``k`` (1 <= k <= n-1) holds the
generator that produces ``Q_k`` from the lower-degree polynomials; slot 0 is
reserved for the family conventions:

* quasiseparable (QS)::

      G_k = alpha_k G_{k-1} + beta_k Q_{k-1}
      Q_k = gamma_k G_{k-1} + (delta_k x + theta_k) Q_{k-1},      G_0 = 0

* semiseparable (SS)::

      G_k = alpha_k G_{k-1} + beta_k (delta_k x + theta_k) Q_{k-1}
      Q_k = gamma_k G_{k-1} + (delta_k x + theta_k) Q_{k-1},      G_0 = beta_0 Q_0

  ``beta[0]`` stores ``beta_0`` (1 for every system built by this package
  except Horner systems, see :mod:`qsvand.horner`).

* well-free (WF)::

      Q_k = (alpha_k x - delta_k) Q_{k-1} - (beta_k x + gamma_k) Q_{k-2}

  with ``alpha_0 = 1`` and ``beta_1 = 0`` (so ``Q_1 = (alpha_1 x - delta_1) Q_0``).

In all cases ``Q_0 = tau0``.  The leading coefficients ``tau_k`` of the
general recurrence are ``delta_k`` for QS/SS and ``alpha_k`` for WF.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .errors import InvalidNodesError, InvalidSystemError


class PolyFamily(str, enum.Enum):
    QS = "qs"
    SS = "ss"
    WF = "wf"


_FIELDS = ("alpha", "beta", "gamma", "delta", "theta")


@dataclass(frozen=True, eq=False)
class PolySystem:
    family: PolyFamily
    tau0: float
    alpha: np.ndarray
    beta: np.ndarray
    gamma: np.ndarray
    delta: np.ndarray
    theta: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "family", PolyFamily(self.family))
        object.__setattr__(self, "tau0", float(self.tau0))
        n = None
        for name in _FIELDS:
            arr = np.array(getattr(self, name), dtype=float).reshape(-1)
            if n is None:
                n = arr.size
            elif arr.size != n:
                raise InvalidSystemError(
                    f"generator {name!r} has length {arr.size}, expected {n}")
            arr.setflags(write=False)
            object.__setattr__(self, name, arr)
        if n < 1:
            raise InvalidSystemError("a system needs at least one polynomial")
        self.validate()

    @property
    def n(self) -> int:
        return self.alpha.size

    @property
    def tau(self) -> np.ndarray:
        """Leading-coefficient ratios ``tau_k`` (slot 0 holds ``tau0``)."""
        lead = self.alpha if self.family is PolyFamily.WF else self.delta
        t = lead.copy()
        t[0] = self.tau0
        return t

    def validate(self) -> None:
        if not math.isfinite(self.tau0) or self.tau0 == 0.0:
            raise InvalidSystemError("tau0 must be finite and nonzero")
        for name in _FIELDS:
            if not np.all(np.isfinite(getattr(self, name))):
                raise InvalidSystemError(f"generator {name!r} is not finite")
        lead = self.alpha if self.family is PolyFamily.WF else self.delta
        bad = np.flatnonzero(lead[1:] == 0.0)
        if bad.size:
            name = "alpha" if self.family is PolyFamily.WF else "delta"
            raise InvalidSystemError(
                f"{self.family.value}: {name}_{bad[0] + 1} is zero, "
                "degree of Q_k would drop")

    def replace(self, **changes) -> "PolySystem":
        fields = {name: getattr(self, name) for name in _FIELDS}
        fields.update(family=self.family, tau0=self.tau0)
        fields.update(changes)
        return PolySystem(**fields)

    def to_dict(self) -> dict:
        out = {"family": self.family.value, "n": self.n, "tau0": self.tau0}
        for name in _FIELDS:
            out[name] = getattr(self, name).tolist()
        return out

    def __eq__(self, other):
        if not isinstance(other, PolySystem):
            return NotImplemented
        return (self.family is other.family and self.tau0 == other.tau0
                and all(np.array_equal(getattr(self, f), getattr(other, f))
                        for f in _FIELDS))

    def __repr__(self):
        return f"PolySystem(family={self.family.value}, n={self.n}, tau0={self.tau0})"


def make_system(family, n, tau0=1.0, **generators) -> PolySystem:
    """Build a system, filling unspecified generators with the family defaults.

    Scalars broadcast to every slot.  Slot 0 is set to the family convention
    (``alpha_0 = 1`` for WF, ``beta_0 = 1`` for SS) unless an array is given.
    """
    family = PolyFamily(family)
    arrays = {}
    for name in _FIELDS:
        value = generators.pop(name, 0.0)
        arr = np.broadcast_to(np.asarray(value, dtype=float), (n,)).copy()
        if np.ndim(value) == 0:
            if family is PolyFamily.WF and name == "alpha":
                arr[0] = 1.0
            elif family is PolyFamily.SS and name == "beta":
                arr[0] = 1.0
            else:
                arr[0] = 0.0
        arrays[name] = arr
    if generators:
        raise TypeError(f"unknown generators: {sorted(generators)}")
    if family is PolyFamily.WF and n > 1:
        arrays["beta"][1] = 0.0
    return PolySystem(family=family, tau0=tau0, **arrays)


def check_nodes(x, distinct=True) -> np.ndarray:
    x = np.array(x, dtype=float).reshape(-1)
    if x.size == 0:
        raise InvalidNodesError("empty node set")
    if not np.all(np.isfinite(x)):
        raise InvalidNodesError("nodes must be finite")
    if np.any(x == 0.0):
        raise InvalidNodesError("nodes must be nonzero (D_{1/x} is needed)")
    if distinct and np.unique(x).size != x.size:
        raise InvalidNodesError("nodes must be pairwise distinct")
    return x


def evaluate_system(sys: PolySystem, x):
    """Values ``[Q_0(x), ..., Q_{n-1}(x)]``.

    ``x`` may be a scalar or an array; the polynomial index is the last axis
    of the result.
    """
    x = np.asarray(x, dtype=float)
    n = sys.n
    out = np.empty(x.shape + (n,))
    out[..., 0] = sys.tau0
    a, b, c, d, t = sys.alpha, sys.beta, sys.gamma, sys.delta, sys.theta
    fam = sys.family
    if fam is PolyFamily.WF:
        for k in range(1, n):
            val = (a[k] * x - d[k]) * out[..., k - 1]
            if k >= 2:
                val = val - (b[k] * x + c[k]) * out[..., k - 2]
            out[..., k] = val
        return out
    if fam is PolyFamily.QS:
        g = np.zeros_like(x)
        for k in range(1, n):
            q = out[..., k - 1]
            g, out[..., k] = a[k] * g + b[k] * q, c[k] * g + (d[k] * x + t[k]) * q
        return out
    g = b[0] * sys.tau0 * np.ones_like(x)
    for k in range(1, n):
        lin = (d[k] * x + t[k]) * out[..., k - 1]
        g, out[..., k] = a[k] * g + b[k] * lin, c[k] * g + lin
    return out


def build_vandermonde(sys: PolySystem, nodes) -> np.ndarray:
    """Polynomial Vandermonde matrix ``V_Q(x)[i, j] = Q_j(x_i)``."""
    x = np.asarray(nodes, dtype=float).reshape(-1)
    return evaluate_system(sys, x)


def classical_vandermonde(nodes, m=None) -> np.ndarray:
    x = np.asarray(nodes, dtype=float).reshape(-1)
    m = x.size if m is None else m
    return np.vander(x, m, increasing=True)


# -- presets -----------------------------------------------------------------

def monomial(n: int) -> PolySystem:
    return make_system("qs", n, delta=1.0)


def chebyshev(n: int) -> PolySystem:
    """Chebyshev polynomials of the first kind, T_k, in well-free form."""
    alpha = np.full(n, 2.0)
    alpha[0] = 1.0
    if n > 1:
        alpha[1] = 1.0
    gamma = np.ones(n)
    gamma[0] = 0.0
    return make_system("wf", n, alpha=alpha, gamma=gamma)


def three_term(alpha, delta, gamma, tau0=1.0) -> PolySystem:
    """Real orthogonal polynomials ``Q_k = (alpha_k x - delta_k) Q_{k-1} - gamma_k Q_{k-2}``.

    Arguments are length-n arrays indexed like the system slots; slot 0 is
    ignored.
    """
    alpha = np.array(alpha, dtype=float)
    if np.any(alpha[1:] == 0.0):
        raise InvalidSystemError("three-term recurrence needs alpha_k != 0")
    alpha[0] = 1.0
    n = alpha.size
    return make_system("wf", n, tau0=tau0, alpha=alpha,
                       delta=np.asarray(delta, dtype=float),
                       gamma=np.asarray(gamma, dtype=float))


def szego(reflections, tau0=1.0) -> PolySystem:
    """Szego polynomials phi^#_k for real reflection coefficients rho_1..rho_{n-1}.

    ``reflections`` has length ``n``; entry 0 (``rho_0 = -1``) is ignored.
    The auxiliary polynomials ``phi_k`` become the semiseparable ``G_k``.
    """
    rho = np.array(reflections, dtype=float).reshape(-1)
    n = rho.size
    if np.any(np.abs(rho[1:]) >= 1.0):
        raise InvalidSystemError("Szego reflection coefficients need |rho_k| < 1")
    mu = np.sqrt(1.0 - np.minimum(rho**2, 1.0))
    mu[0] = 1.0
    alpha = 1.0 / mu
    delta = 1.0 / mu
    gamma = -rho / mu
    beta = -rho
    alpha[0] = delta[0] = gamma[0] = 0.0
    beta[0] = 1.0
    return make_system("ss", n, tau0=tau0, alpha=alpha, beta=beta,
                       gamma=gamma, delta=delta, theta=np.zeros(n))


def preset(kind: str, n: int | None = None, **params) -> PolySystem:
    if kind == "monomial":
        return monomial(n)
    if kind == "chebyshev":
        return chebyshev(n)
    if kind == "three_term":
        return three_term(**params)
    if kind == "szego":
        return szego(**params)
    raise InvalidSystemError(f"unknown preset {kind!r}")
