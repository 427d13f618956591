"""Cyclic Jacobi eigenvalue kernels.

Two implementations of the same sweep: a scalar-loop kernel compiled with
numba, and a pure-numpy kernel that applies each rotation with row/column
slices.  ``jacobi`` dispatches to the numba kernel unless numba is missing or
``OHYPER_DISABLE_NUMBA`` is set to a non-empty value other than ``0``.
"""

from __future__ import annotations

import math
import os

import numpy as np

ENV_FLAG = "OHYPER_DISABLE_NUMBA"

try:
    from numba import njit
except ImportError:  # pragma: no cover
    njit = None


def _numba_disabled() -> bool:
    return os.environ.get(ENV_FLAG, "") not in ("", "0")


def _rotation(app: float, aqq: float, apq: float) -> tuple[float, float]:
    theta = (aqq - app) / (2.0 * apq)
    if theta >= 0.0:
        t = 1.0 / (theta + math.sqrt(theta * theta + 1.0))
    else:
        t = -1.0 / (-theta + math.sqrt(theta * theta + 1.0))
    c = 1.0 / math.sqrt(t * t + 1.0)
    return c, t * c


def _jacobi_loops(a, tol, max_sweeps):
    n = a.shape[0]
    sweeps = 0
    while True:
        off = 0.0
        for p in range(n):
            for q in range(p + 1, n):
                off += 2.0 * a[p, q] * a[p, q]
        off = math.sqrt(off)
        if off < tol or sweeps == max_sweeps:
            break
        sweeps += 1
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if apq == 0.0:
                    continue
                theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                if theta >= 0.0:
                    t = 1.0 / (theta + math.sqrt(theta * theta + 1.0))
                else:
                    t = -1.0 / (-theta + math.sqrt(theta * theta + 1.0))
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                for k in range(n):
                    akp = a[k, p]
                    akq = a[k, q]
                    a[k, p] = c * akp - s * akq
                    a[k, q] = s * akp + c * akq
                for k in range(n):
                    apk = a[p, k]
                    aqk = a[q, k]
                    a[p, k] = c * apk - s * aqk
                    a[q, k] = s * apk + c * aqk
    diag = np.empty(n)
    for i in range(n):
        diag[i] = a[i, i]
    return diag, sweeps, off


if njit is not None:
    _jacobi_loops_jit = njit(cache=True)(_jacobi_loops)
else:  # pragma: no cover
    _jacobi_loops_jit = None


def jacobi_numpy(a: np.ndarray, tol: float, max_sweeps: int):
    """Sliced-numpy sweep; returns ``(diagonal, sweeps, off_norm)``."""
    a = np.array(a, dtype=np.float64)
    n = a.shape[0]
    iu = np.triu_indices(n, 1)
    sweeps = 0
    while True:
        off = math.sqrt(2.0 * float(np.sum(a[iu] ** 2)))
        if off < tol or sweeps == max_sweeps:
            break
        sweeps += 1
        for p, q in zip(*iu):
            apq = a[p, q]
            if apq == 0.0:
                continue
            c, s = _rotation(a[p, p], a[q, q], apq)
            cp, cq = a[:, p].copy(), a[:, q].copy()
            a[:, p] = c * cp - s * cq
            a[:, q] = s * cp + c * cq
            rp, rq = a[p, :].copy(), a[q, :].copy()
            a[p, :] = c * rp - s * rq
            a[q, :] = s * rp + c * rq
    return a.diagonal().copy(), sweeps, off


def jacobi_numba(a: np.ndarray, tol: float, max_sweeps: int):
    if _jacobi_loops_jit is None:  # pragma: no cover
        raise RuntimeError("numba is not installed")
    return _jacobi_loops_jit(np.array(a, dtype=np.float64), float(tol), int(max_sweeps))


def backend() -> str:
    if _jacobi_loops_jit is None or _numba_disabled():
        return "numpy"
    return "numba"


def jacobi(a: np.ndarray, tol: float, max_sweeps: int):
    if backend() == "numba":
        return jacobi_numba(a, tol, max_sweeps)
    return jacobi_numpy(a, tol, max_sweeps)
