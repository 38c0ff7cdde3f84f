"""Weighted graphs and the matrix representations used as graph shift operators.

The adjacency matrix plays the role of the shift operator: applied to a
spatial signal it moves each node's value onto its neighbours, weighted by
the connection strength. The Laplacian L = D - A is the matching negative
difference operator. Both, plus their normalised and symmetrised variants,
feed the spectral decompositions in :mod:`graphspec.spectral`.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .errors import DimensionMismatch, NegativeDegree, NotSymmetric, ZeroSpectrum
from .signals import as_matrix

#: Absolute tolerance below which a_ij and a_ji are considered equal.
#: Correlation graphs are symmetric only up to floating-point noise.
SYMMETRY_TOL = 1e-12


class GraphMatrixKind(Enum):
    """Matrix representation of a graph used to build a Fourier basis."""

    ADJACENCY = "adjacency"
    NORMALIZED_ADJACENCY = "normalized_adjacency"
    LAPLACIAN = "laplacian"
    NORMALIZED_LAPLACIAN = "normalized_laplacian"
    SYMMETRIZED_LAPLACIAN = "symmetrized_laplacian"


@dataclass(frozen=True)
class WeightedGraph:
    """Square real weight matrix with symmetry and self-loop metadata.

    `symmetric` is true iff |a_ij - a_ji| <= sym_tol for all i, j;
    `has_self_loops` is false iff every diagonal entry is exactly 0.
    Both flags are derived from the weights at construction.
    """

    weights: np.ndarray
    symmetric: bool
    has_self_loops: bool

    def __post_init__(self):
        w = np.asarray(self.weights, dtype=float)
        if w.ndim != 2 or w.shape[0] != w.shape[1]:
            raise DimensionMismatch(f"weights must be square, got shape {w.shape}")
        if w.shape[0] < 1:
            raise DimensionMismatch("graph needs at least one node")
        if not np.all(np.isfinite(w)):
            raise ValueError("weights contain non-finite entries")
        w = w.copy()
        w.setflags(write=False)
        object.__setattr__(self, "weights", w)

    @classmethod
    def from_weights(cls, weights, sym_tol: float = SYMMETRY_TOL) -> "WeightedGraph":
        """Build a graph, deriving the symmetry/self-loop flags from `weights`."""
        w = np.asarray(weights, dtype=float)
        if w.ndim != 2 or w.shape[0] != w.shape[1]:
            raise DimensionMismatch(f"weights must be square, got shape {w.shape}")
        symmetric = bool(np.max(np.abs(w - w.T), initial=0.0) <= sym_tol)
        has_self_loops = bool(np.any(np.diag(w) != 0.0))
        return cls(w, symmetric, has_self_loops)

    @property
    def n(self) -> int:
        return self.weights.shape[0]


def degree_matrix(g: WeightedGraph) -> np.ndarray:
    """Diagonal matrix of row sums D_ii = sum_j a_ij."""
    return np.diag(g.weights.sum(axis=1))


def laplacian(g: WeightedGraph) -> np.ndarray:
    """L = D - A."""
    return degree_matrix(g) - g.weights


def normalized_laplacian(g: WeightedGraph) -> np.ndarray:
    """L_norm = D^(-1/2) L D^(-1/2); requires strictly positive degrees."""
    degrees = g.weights.sum(axis=1)
    if np.any(degrees <= 0.0):
        bad = int(np.argmin(degrees))
        raise NegativeDegree(
            f"node {bad} has non-positive degree {degrees[bad]:.6g}; "
            "D^(-1/2) is not real-valued"
        )
    inv_sqrt = 1.0 / np.sqrt(degrees)
    return laplacian(g) * np.outer(inv_sqrt, inv_sqrt)


def symmetrized_laplacian(g: WeightedGraph) -> np.ndarray:
    """L_sym = D_sym - (A + A^T)/2 with D_sym from the symmetrised weights."""
    sym = (g.weights + g.weights.T) / 2.0
    return np.diag(sym.sum(axis=1)) - sym


def normalized_adjacency(g: WeightedGraph) -> np.ndarray:
    """A / |lambda_max|, scaling the spectral radius to 1.

    lambda_max is the eigenvalue of largest magnitude: graphs with negative
    weights can have a dominant negative eigenvalue, and it is the spectral
    radius that bounds shift stability.
    """
    if not g.symmetric:
        raise NotSymmetric("normalized_adjacency needs a symmetric graph")
    eigenvalues = np.linalg.eigvalsh(g.weights)
    radius = np.max(np.abs(eigenvalues))
    if radius <= 0.0:
        raise ZeroSpectrum("all eigenvalues are zero; cannot normalise")
    return g.weights / radius


def graph_matrix(g: WeightedGraph, kind: GraphMatrixKind) -> np.ndarray:
    """The matrix representation of `g` selected by `kind`."""
    if kind is GraphMatrixKind.ADJACENCY:
        return np.array(g.weights)
    if kind is GraphMatrixKind.NORMALIZED_ADJACENCY:
        return normalized_adjacency(g)
    if kind is GraphMatrixKind.LAPLACIAN:
        return laplacian(g)
    if kind is GraphMatrixKind.NORMALIZED_LAPLACIAN:
        return normalized_laplacian(g)
    if kind is GraphMatrixKind.SYMMETRIZED_LAPLACIAN:
        return symmetrized_laplacian(g)
    raise ValueError(f"unknown graph matrix kind: {kind!r}")


def cyclic_shift(n: int) -> WeightedGraph:
    """Adjacency matrix of the directed n-cycle, i.e. the one-step time shift.

    Applied to (s_0, ..., s_{n-1}) it yields (s_{n-1}, s_0, ..., s_{n-2}).
    """
    if n < 2:
        raise ValueError(f"cyclic shift needs n >= 2, got {n}")
    w = np.zeros((n, n))
    w[np.arange(n), np.arange(-1, n - 1)] = 1.0
    return WeightedGraph.from_weights(w)


def exp_distance_graph(rows, sigma: float) -> WeightedGraph:
    """Gaussian-kernel graph a_ij = exp(-||x_i* - x_j*||^2 / sigma).

    Rows of the input matrix are the per-node signals. The diagonal is
    forced to 0 (the kernel itself gives 1) to keep the graph simple.
    """
    if sigma <= 0.0:
        raise ValueError(f"sigma must be positive, got {sigma}")
    x = as_matrix(rows)
    sq_norms = np.sum(x * x, axis=1)
    sq_dist = sq_norms[:, None] + sq_norms[None, :] - 2.0 * (x @ x.T)
    np.maximum(sq_dist, 0.0, out=sq_dist)
    w = np.exp(-sq_dist / sigma)
    w = (w + w.T) / 2.0
    np.fill_diagonal(w, 0.0)
    return WeightedGraph.from_weights(w)


def write_graph_csv(g: WeightedGraph, path) -> None:
    """Write the upper triangle plus diagonal as `node_i,node_j,weight` rows."""
    if not g.symmetric:
        raise NotSymmetric("graph CSV stores one triangle; graph must be symmetric")
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["node_i", "node_j", "weight"])
        for i in range(g.n):
            for j in range(i, g.n):
                writer.writerow([i, j, repr(g.weights[i, j])])


def read_graph_csv(path) -> WeightedGraph:
    """Reconstruct a symmetric graph written by :func:`write_graph_csv`."""
    entries = {}
    n = 0
    with open(path, newline="") as fh:
        reader = csv.DictReader(fh)
        for row in reader:
            i, j = int(row["node_i"]), int(row["node_j"])
            entries[(i, j)] = float(row["weight"])
            n = max(n, i + 1, j + 1)
    if n == 0:
        raise ValueError(f"no graph rows found in {path}")
    w = np.zeros((n, n))
    for (i, j), value in entries.items():
        w[i, j] = value
        w[j, i] = value
    return WeightedGraph.from_weights(w)
