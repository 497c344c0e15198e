"""Spectral radius and Perron vector of adjacency matrices.

Power iteration runs on A + I: bipartite graphs have -rho in the spectrum,
and the unit shift stops the iterate from oscillating between two
directions. ``dense_spectrum`` is a cyclic Jacobi solver kept as an
independent check on the power iteration.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .graph import GRAPH6_MAX_N, Graph, components, induced_subgraph, is_connected, vertices_of

DEFAULT_TOL = 1e-12
MAX_ITERATIONS = 10**6
JACOBI_TOL = 1e-12
JACOBI_MAX_SWEEPS = 100


class ConvergenceError(RuntimeError):
    pass


@dataclass
class PerronResult:
    """Dominant eigenpair with the vector scaled so its largest entry is 1."""

    rho: float
    vector: np.ndarray
    residual: float
    iterations: int

    @property
    def argmax(self) -> int:
        return int(np.argmax(self.vector))

    def to_dict(self) -> dict:
        return {
            "rho": self.rho,
            "vector": [float(v) for v in self.vector],
            "residual": self.residual,
            "iterations": self.iterations,
        }


def spectral_radius(g: Graph, tol: float = DEFAULT_TOL, max_iter: int = MAX_ITERATIONS) -> PerronResult:
    """Perron root and vector of a connected graph by shifted power iteration.

    Stops when ``max|Ax - rho x| <= tol * max(rho, 1)``.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    if not is_connected(g):
        raise ValueError("spectral_radius needs a connected graph")
    if g.n == 1:
        return PerronResult(0.0, np.ones(1), 0.0, 0)
    a = g.adjacency_matrix()
    x = np.ones(g.n)
    for it in range(max_iter + 1):
        ax = a @ x
        rho = float(x @ ax / (x @ x))
        residual = float(np.max(np.abs(ax - rho * x)))
        if residual <= tol * max(rho, 1.0):
            return PerronResult(rho, x, residual, it)
        y = ax + x
        x = y / y.max()
    raise ConvergenceError(f"power iteration did not reach residual {tol} in {max_iter} iterations")


def largest_eigenvalue(g: Graph, tol: float = DEFAULT_TOL) -> float:
    """Spectral radius of any graph: the maximum over its components."""
    best = 0.0
    for comp in components(g):
        if comp.bit_count() > 1:
            best = max(best, spectral_radius(induced_subgraph(g, comp), tol).rho)
    return best


@dataclass(frozen=True)
class Spectrum:
    eigenvalues: tuple[float, ...]

    @property
    def largest(self) -> float:
        return self.eigenvalues[-1]

    @property
    def trace(self) -> float:
        return float(sum(self.eigenvalues))

    @property
    def trace_of_square(self) -> float:
        return float(sum(v * v for v in self.eigenvalues))


def jacobi_eigenvalues(a: np.ndarray, tol: float = JACOBI_TOL, max_sweeps: int = JACOBI_MAX_SWEEPS) -> np.ndarray:
    """Eigenvalues of a real symmetric matrix by cyclic Jacobi rotations, ascending."""
    a = np.array(a, dtype=float)
    n = a.shape[0]
    for _ in range(max_sweeps):
        off = np.sqrt(2.0 * np.sum(np.triu(a, 1) ** 2))
        if off <= tol:
            return np.sort(np.diag(a))
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if apq == 0.0:
                    continue
                theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                t = 1.0 / (abs(theta) + np.hypot(theta, 1.0))
                if theta < 0:
                    t = -t
                c = 1.0 / np.sqrt(t * t + 1.0)
                s = t * c
                col_p = a[:, p].copy()
                col_q = a[:, q].copy()
                a[:, p] = c * col_p - s * col_q
                a[:, q] = s * col_p + c * col_q
                row_p = a[p, :].copy()
                row_q = a[q, :].copy()
                a[p, :] = c * row_p - s * row_q
                a[q, :] = s * row_p + c * row_q
                a[p, q] = a[q, p] = 0.0
    raise ConvergenceError(f"Jacobi did not converge in {max_sweeps} sweeps")


def dense_spectrum(g: Graph) -> Spectrum:
    if g.n > GRAPH6_MAX_N:
        raise ValueError(f"dense_spectrum is limited to n <= {GRAPH6_MAX_N}")
    return Spectrum(tuple(float(v) for v in jacobi_eigenvalues(g.adjacency_matrix())))


def rayleigh_quotient(g: Graph, x) -> float:
    """x^T A x / x^T x, computed as twice the edge sum over the squared norm."""
    x = np.asarray(x, dtype=float)
    if x.shape != (g.n,):
        raise ValueError(f"vector has shape {x.shape}, expected ({g.n},)")
    norm = float(x @ x)
    if norm == 0.0:
        raise ValueError("Rayleigh quotient of the zero vector")
    return 2.0 * edge_product_sum(g, x) / norm


def edge_product_sum(g: Graph, x) -> float:
    """Sum of x_u * x_v over the edges uv of ``g``."""
    total = 0.0
    for u in range(g.n):
        nb = vertices_of(g.adj[u] >> (u + 1) << (u + 1))
        if nb:
            total += x[u] * float(np.sum(np.asarray(x)[nb]))
    return float(total)
