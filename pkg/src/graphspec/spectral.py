"""Graph Fourier bases: eigendecomposition, the two transform families,
frequency ordering, the PCA link, and the adjacency/Laplacian alignment
diagnostic.

Two constructions of the transform coexist. The filter-based family
decomposes the adjacency matrix and orders eigenvalues from highest to
lowest, because for adjacency eigenvectors the node total variation
|1 - lambda/lambda_max| grows as the eigenvalue falls. The derivative-based
family decomposes the Laplacian and orders eigenvalues ascending, because
an eigenvector's edge total variation equals its eigenvalue. In both cases
mode 0 is the lowest graph frequency.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .errors import DimensionMismatch, KindMismatch, NotSymmetric
from .graphs import GraphMatrixKind, WeightedGraph, graph_matrix, laplacian
from .signals import as_matrix, like

#: Relative symmetry tolerance for matrices entering the eigensolver.
EIG_SYMMETRY_TOL = 1e-9
#: Eigenvalues closer than this are treated as one degenerate cluster.
CLUSTER_TOL = 1e-8


class GftKind(Enum):
    """Which transform family a basis belongs to."""

    ADJACENCY_BASED = "adjacency"
    LAPLACIAN_BASED = "laplacian"


_DEFAULT_SOURCE = {
    GftKind.ADJACENCY_BASED: GraphMatrixKind.ADJACENCY,
    GftKind.LAPLACIAN_BASED: GraphMatrixKind.LAPLACIAN,
}
_ALLOWED_SOURCES = {
    GftKind.ADJACENCY_BASED: {
        GraphMatrixKind.ADJACENCY,
        GraphMatrixKind.NORMALIZED_ADJACENCY,
    },
    GftKind.LAPLACIAN_BASED: {
        GraphMatrixKind.LAPLACIAN,
        GraphMatrixKind.NORMALIZED_LAPLACIAN,
        GraphMatrixKind.SYMMETRIZED_LAPLACIAN,
    },
}


@dataclass(frozen=True)
class GraphFourierBasis:
    """Frequency-ordered orthonormal eigenbasis of a graph matrix.

    Column k of `modes` is graph Fourier mode k; `eigenvalues[k]` is its
    eigenvalue in the source matrix. Mode 0 is the lowest graph frequency:
    eigenvalues are non-increasing for adjacency-based bases and
    non-decreasing for Laplacian-based ones.
    """

    kind: GftKind
    eigenvalues: np.ndarray
    modes: np.ndarray
    source_kind: GraphMatrixKind

    def __post_init__(self):
        eigenvalues = np.asarray(self.eigenvalues, dtype=float)
        modes = np.asarray(self.modes, dtype=float)
        n = eigenvalues.shape[0]
        if modes.shape != (n, n):
            raise DimensionMismatch(
                f"modes shape {modes.shape} does not match {n} eigenvalues"
            )
        gram_err = np.max(np.abs(modes.T @ modes - np.eye(n)))
        if gram_err > 1e-9:
            raise ValueError(f"modes are not orthonormal (error {gram_err:.3g})")
        diffs = np.diff(eigenvalues)
        if self.kind is GftKind.ADJACENCY_BASED:
            if np.any(diffs > CLUSTER_TOL):
                raise ValueError("adjacency-based eigenvalues must be non-increasing")
        else:
            if np.any(diffs < -CLUSTER_TOL):
                raise ValueError("laplacian-based eigenvalues must be non-decreasing")
        eigenvalues = eigenvalues.copy()
        modes = modes.copy()
        eigenvalues.setflags(write=False)
        modes.setflags(write=False)
        object.__setattr__(self, "eigenvalues", eigenvalues)
        object.__setattr__(self, "modes", modes)

    @property
    def n(self) -> int:
        return self.eigenvalues.shape[0]


def _fix_signs(vectors: np.ndarray) -> np.ndarray:
    """Flip columns so the first entry above 1e-12 in magnitude is positive."""
    vectors = vectors.copy()
    for k in range(vectors.shape[1]):
        col = vectors[:, k]
        nonzero = np.nonzero(np.abs(col) > 1e-12)[0]
        if nonzero.size and col[nonzero[0]] < 0.0:
            vectors[:, k] = -col
    return vectors


def _sort_degenerate(values: np.ndarray, vectors: np.ndarray):
    """Order columns inside each degenerate cluster lexicographically."""
    n = values.shape[0]
    start = 0
    while start < n:
        stop = start + 1
        while stop < n and values[stop] - values[stop - 1] <= CLUSTER_TOL:
            stop += 1
        if stop - start > 1:
            block = vectors[:, start:stop]
            order = np.lexsort(block[::-1])
            vectors[:, start:stop] = block[:, order]
            values[start:stop] = values[start:stop][order]
        start = stop
    return values, vectors


def eigendecompose_symmetric(m, tol: float = EIG_SYMMETRY_TOL):
    """Eigendecompose a symmetric matrix into (ascending values, orthonormal vectors).

    Applies the deterministic sign convention and resolves degenerate
    eigenvalue clusters by lexicographic ordering of the eigenvector
    entries, so repeated runs produce identical bases.
    """
    m = np.asarray(m, dtype=float)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise DimensionMismatch(f"expected a square matrix, got shape {m.shape}")
    scale = max(np.max(np.abs(m)), 1.0)
    if np.max(np.abs(m - m.T)) > tol * scale:
        raise NotSymmetric("matrix is not symmetric within tolerance")
    values, vectors = np.linalg.eigh((m + m.T) / 2.0)
    vectors = _fix_signs(vectors)
    values, vectors = _sort_degenerate(values, vectors)
    return values, vectors


def gft_basis(
    g: WeightedGraph,
    kind: GftKind,
    source: GraphMatrixKind | None = None,
) -> GraphFourierBasis:
    """Build the frequency-ordered Fourier basis of `g`.

    `source` selects the matrix representation; by default the plain
    adjacency or Laplacian matrix matching `kind`.
    """
    if source is None:
        source = _DEFAULT_SOURCE[kind]
    if source not in _ALLOWED_SOURCES[kind]:
        raise KindMismatch(f"{source.value} cannot back a {kind.value}-based basis")
    if not g.symmetric:
        raise NotSymmetric("graph Fourier basis needs a symmetric graph")
    values, vectors = eigendecompose_symmetric(graph_matrix(g, source))
    if kind is GftKind.ADJACENCY_BASED:
        values = values[::-1]
        vectors = vectors[:, ::-1]
    return GraphFourierBasis(kind, values, vectors, source)


def identity_basis(n: int, kind: GftKind) -> GraphFourierBasis:
    """Identity transform: modes are the single channels themselves.

    The "eigenvalues" of the identity are all one, so the modes carry no
    frequency ordering; index k simply means channel k.
    """
    return GraphFourierBasis(kind, np.ones(n), np.eye(n), _DEFAULT_SOURCE[kind])


def gft(basis: GraphFourierBasis, x):
    """Project a spatial or multivariate signal onto the graph Fourier modes.

    Row k of the result is the graph frequency signal at frequency index k.
    """
    values = as_matrix(x)
    if values.shape[0] != basis.n:
        raise DimensionMismatch(
            f"signal has {values.shape[0]} channels, basis has {basis.n}"
        )
    return like(x, basis.modes.T @ values)


def igft(basis: GraphFourierBasis, xt):
    """Inverse transform, exact up to rounding: modes @ xt."""
    values = as_matrix(xt)
    if values.shape[0] != basis.n:
        raise DimensionMismatch(
            f"transform has {values.shape[0]} rows, basis has {basis.n}"
        )
    return like(xt, basis.modes @ values)


def dft_matrix(n: int) -> np.ndarray:
    """Unitary DFT matrix diagonalising the cyclic shift.

    With omega = exp(2j*pi/n), entry (k, m) is omega^(k*m)/sqrt(n), so
    cyclic_shift(n).weights == dft^(-1) @ diag(omega^k) @ dft and the
    inverse is the conjugate transpose.
    """
    if n < 2:
        raise ValueError(f"dft_matrix needs n >= 2, got {n}")
    k = np.arange(n)
    return np.exp(2j * np.pi * np.outer(k, k) / n) / np.sqrt(n)


def pca_components(x):
    """Principal components of the channel covariance, variance-descending.

    Returns (variances, components); column k of `components` is the k-th
    component. Uses the same sign convention as the Fourier bases, so for
    row-standardised signals the components coincide entrywise with the
    adjacency-based modes of the correlation graph.
    """
    values = as_matrix(x)
    if values.ndim != 2 or values.shape[1] < 2:
        raise DimensionMismatch("pca needs an (n_channels, n_time >= 2) matrix")
    centered = values - values.mean(axis=1, keepdims=True)
    cov = (centered @ centered.T) / values.shape[1]
    variances, components = eigendecompose_symmetric(cov)
    return variances[::-1], components[:, ::-1]


@dataclass(frozen=True)
class AlignmentReport:
    """Similarity of the two transform families on one graph.

    `score` averages, over the k lowest-frequency indices, the overlap
    between Laplacian-based mode i and the adjacency-based eigenspace at
    index i (full degenerate clusters are compared, not single vectors).
    `diagonal_residual` is ||D - mu*(n-1)*I||_F / ||L||_F with mu the mean
    off-diagonal weight: the size of the term that distinguishes the
    Laplacian from a shifted negated adjacency matrix.
    """

    score: float
    diagonal_residual: float


def adjacency_laplacian_alignment(g: WeightedGraph, k: int) -> AlignmentReport:
    """Measure how similar the adjacency- and Laplacian-based bases are."""
    if not g.symmetric:
        raise NotSymmetric("alignment diagnostic needs a symmetric graph")
    if not 1 <= k <= g.n:
        raise ValueError(f"mode count k={k} outside 1..{g.n}")
    adj = gft_basis(g, GftKind.ADJACENCY_BASED)
    lap = gft_basis(g, GftKind.LAPLACIAN_BASED)
    overlaps = []
    for i in range(k):
        cluster = np.abs(adj.eigenvalues - adj.eigenvalues[i]) <= CLUSTER_TOL
        projection = adj.modes[:, cluster].T @ lap.modes[:, i]
        overlaps.append(min(float(np.linalg.norm(projection)), 1.0))
    n = g.n
    off_diag = g.weights[~np.eye(n, dtype=bool)]
    mu = float(off_diag.mean()) if n > 1 else 0.0
    degrees = g.weights.sum(axis=1)
    residual_num = np.linalg.norm(degrees - mu * (n - 1))
    residual_den = np.linalg.norm(laplacian(g))
    residual = float(residual_num / residual_den) if residual_den > 0 else 0.0
    return AlignmentReport(float(np.mean(overlaps)), residual)


def export_modes_csv(basis: GraphFourierBasis, path) -> None:
    """Write `mode_index,eigenvalue,node,weight` rows in frequency order."""
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["mode_index", "eigenvalue", "node", "weight"])
        for k in range(basis.n):
            for node in range(basis.n):
                writer.writerow(
                    [k, repr(basis.eigenvalues[k]), node, repr(basis.modes[node, k])]
                )
