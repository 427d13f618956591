"""Exact integer matrices of oriented hypergraphs and their real spectra.

Matrices are ``numpy`` ``int64`` arrays indexed by the stored vertex and edge
orders.  Every identity between them is an exact integer statement; only
eigenvalues are floating point.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _kernels
from .hypercore import OrientedHypergraph, adjacency_sign, degrees

ZERO_TOL = 1e-8
PAIR_TOL = 1e-8
SOLVER_TOL = 1e-10
MAX_SWEEPS = 100


class ConvergenceError(ArithmeticError):
    pass


def incidence_matrix(G: OrientedHypergraph) -> np.ndarray:
    H = np.zeros((G.n, G.m), dtype=np.int64)
    for j, e in enumerate(G.edges):
        for v, s in e.members:
            H[G.vertex_index(v), j] = s
    return H


def adjacency_matrix(G: OrientedHypergraph) -> np.ndarray:
    """Sum of adjacency signs over every edge joining each vertex pair."""
    A = np.zeros((G.n, G.n), dtype=np.int64)
    for e in G.edges:
        vs = e.vertices
        for a in range(len(vs)):
            for b in range(a + 1, len(vs)):
                i, j = G.vertex_index(vs[a]), G.vertex_index(vs[b])
                s = adjacency_sign(G, e.label, vs[a], vs[b])
                A[i, j] += s
                A[j, i] += s
    return A


def degree_matrix(G: OrientedHypergraph) -> np.ndarray:
    return np.diag(np.array(degrees(G), dtype=np.int64)).reshape(G.n, G.n)


def laplacian_matrix(G: OrientedHypergraph) -> np.ndarray:
    return degree_matrix(G) - adjacency_matrix(G)


def identity(n: int) -> np.ndarray:
    return np.eye(n, dtype=np.int64)


def ones(n: int) -> np.ndarray:
    return np.ones((n, n), dtype=np.int64)


def mat_mul(A: np.ndarray, B: np.ndarray) -> np.ndarray:
    if A.ndim != 2 or B.ndim != 2 or A.shape[1] != B.shape[0]:
        raise ValueError(f"cannot multiply {A.shape} by {B.shape}")
    return A @ B


def mat_transpose(A: np.ndarray) -> np.ndarray:
    return A.T.copy()


def mat_eq(A: np.ndarray, B: np.ndarray) -> bool:
    return A.shape == B.shape and bool(np.array_equal(A, B))


def trace(A: np.ndarray) -> int:
    if A.ndim != 2 or A.shape[0] != A.shape[1]:
        raise ValueError(f"trace of non-square matrix {A.shape}")
    return int(np.trace(A))


@dataclass(frozen=True)
class Spectrum:
    """Eigenvalues sorted from largest to smallest."""

    values: tuple[float, ...]
    zero_tolerance: float = ZERO_TOL

    def __post_init__(self) -> None:
        object.__setattr__(
            self, "values", tuple(sorted((float(x) for x in self.values), reverse=True))
        )

    def __len__(self) -> int:
        return len(self.values)

    def __getitem__(self, i):
        return self.values[i]

    @property
    def max(self) -> float:
        return self.values[0]

    @property
    def min(self) -> float:
        return self.values[-1]

    def nonzero(self) -> tuple[float, ...]:
        return tuple(x for x in self.values if abs(x) >= self.zero_tolerance)


def symmetric_eigenvalues(
    M, tol: float = SOLVER_TOL, max_sweeps: int = MAX_SWEEPS
) -> Spectrum:
    """All eigenvalues of a real symmetric matrix by cyclic Jacobi rotation.

    Raises ``ValueError`` for non-square or non-symmetric input and
    ``ConvergenceError`` if the off-diagonal norm is still above ``tol``
    after ``max_sweeps`` sweeps.
    """
    M = np.asarray(M)
    if M.ndim != 2 or M.shape[0] != M.shape[1]:
        raise ValueError(f"eigenvalues need a square matrix, got shape {M.shape}")
    if np.issubdtype(M.dtype, np.integer):
        symmetric = np.array_equal(M, M.T)
    else:
        scale = max(1.0, float(np.max(np.abs(M)))) if M.size else 1.0
        symmetric = bool(np.all(np.abs(M - M.T) <= 1e-12 * scale))
    if not symmetric:
        raise ValueError("eigenvalues need a symmetric matrix")
    n = M.shape[0]
    diag, sweeps, off = _kernels.jacobi(M, tol, max_sweeps)
    if off >= tol:
        raise ConvergenceError(
            f"Jacobi did not converge: off-diagonal norm {off:.3e} after {sweeps} sweeps"
        )
    spec = Spectrum(tuple(diag))
    tr = float(np.trace(M)) if n else 0.0
    if abs(sum(spec.values) - tr) > 1e-8 * max(n, 1):
        raise ConvergenceError(f"eigenvalue sum {sum(spec.values)!r} drifted from trace {tr!r}")
    return spec


def nonzero_spectra_equal(a: Spectrum, b: Spectrum, tol: float = PAIR_TOL) -> bool:
    x, y = a.nonzero(), b.nonzero()
    return len(x) == len(y) and all(abs(p - q) <= tol for p, q in zip(x, y))


def spectra_equal(a: Spectrum, b: Spectrum, tol: float = PAIR_TOL) -> bool:
    return len(a) == len(b) and all(abs(p - q) <= tol for p, q in zip(a.values, b.values))


def format_matrix(A: np.ndarray) -> str:
    return "".join(" ".join(str(int(x)) for x in row) + "\n" for row in A)


def format_value(x: float) -> str:
    s = f"{x:.6f}"
    return "0.000000" if s == "-0.000000" else s


def format_spectrum(spec: Spectrum) -> str:
    return "".join(format_value(x) + "\n" for x in spec.values)
