"""Compiled O(n) kernels for upper-triangular 2-quasiseparable matrices.

Entry (r, c), r < c, of the represented matrix is ``g[r] @ b[r+1] @ ... @ b[c-1] @ h[c]``
and the diagonal is ``d``.  Row vectors are multiplied from the left, so the
kernels carry a running 2-vector ``f_c = sum_{r<c} v_r g_r b_{r+1} ... b_{c-1}``.
"""

import numba
import numpy as np


@numba.njit(cache=True)
def rowvec_times(d, g, b, h, v):
    n = d.shape[0]
    out = np.empty(n)
    f0 = 0.0
    f1 = 0.0
    for c in range(n):
        out[c] = f0 * h[c, 0] + f1 * h[c, 1] + v[c] * d[c]
        if c + 1 < n:
            bb = b[c]
            nf0 = f0 * bb[0, 0] + f1 * bb[1, 0] + v[c] * g[c, 0]
            nf1 = f0 * bb[0, 1] + f1 * bb[1, 1] + v[c] * g[c, 1]
            f0 = nf0
            f1 = nf1
    return out


@numba.njit(cache=True)
def rowvec_solve(d, g, b, h, rhs):
    n = d.shape[0]
    v = np.empty(n)
    f0 = 0.0
    f1 = 0.0
    for c in range(n):
        v[c] = (rhs[c] - f0 * h[c, 0] - f1 * h[c, 1]) / d[c]
        if c + 1 < n:
            bb = b[c]
            nf0 = f0 * bb[0, 0] + f1 * bb[1, 0] + v[c] * g[c, 0]
            nf1 = f0 * bb[0, 1] + f1 * bb[1, 1] + v[c] * g[c, 1]
            f0 = nf0
            f1 = nf1
    return v


@numba.njit(cache=True)
def dense_from_generators(d, g, b, h):
    n = d.shape[0]
    out = np.zeros((n, n))
    for r in range(n):
        out[r, r] = d[r]
        p0 = g[r, 0]
        p1 = g[r, 1]
        for c in range(r + 1, n):
            out[r, c] = p0 * h[c, 0] + p1 * h[c, 1]
            bb = b[c]
            np0 = p0 * bb[0, 0] + p1 * bb[1, 0]
            np1 = p0 * bb[0, 1] + p1 * bb[1, 1]
            p0 = np0
            p1 = np1
    return out
