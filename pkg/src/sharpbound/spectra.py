"""The six standard matrices of a graph or digraph and their exact spectral radii."""
from __future__ import annotations

import enum

import numpy as np

from . import graphs
from .graphs import AnyGraph, Digraph
from .linalg import DenseMatrix, SpectralResult, spectral_radius_general, spectral_radius_symmetric


class MatrixKind(enum.Enum):
    ADJACENCY = "adjacency"
    LAPLACIAN = "laplacian"
    SIGNLESS_LAPLACIAN = "signless-laplacian"
    DISTANCE = "distance"
    DISTANCE_LAPLACIAN = "distance-laplacian"
    DISTANCE_SIGNLESS_LAPLACIAN = "distance-signless-laplacian"

    @property
    def is_distance(self) -> bool:
        return self in DISTANCE_KINDS

    @property
    def is_signed(self) -> bool:
        """Laplacian-type matrices carry negative off-diagonal entries."""
        return self in (MatrixKind.LAPLACIAN, MatrixKind.DISTANCE_LAPLACIAN)

    @property
    def symbol(self) -> str:
        return _SYMBOLS[self]


DISTANCE_KINDS = frozenset({MatrixKind.DISTANCE, MatrixKind.DISTANCE_LAPLACIAN,
                            MatrixKind.DISTANCE_SIGNLESS_LAPLACIAN})

_SYMBOLS = {
    MatrixKind.ADJACENCY: "rho",
    MatrixKind.LAPLACIAN: "mu",
    MatrixKind.SIGNLESS_LAPLACIAN: "q",
    MatrixKind.DISTANCE: "rho^D",
    MatrixKind.DISTANCE_LAPLACIAN: "mu^D",
    MatrixKind.DISTANCE_SIGNLESS_LAPLACIAN: "q^D",
}


def build_array(kind: MatrixKind, g: AnyGraph) -> np.ndarray:
    """Integer matrix of the given kind (raises for distance kinds on disconnected input)."""
    kind = MatrixKind(kind)
    if kind.is_distance:
        dd = graphs.distance_matrix(g)
        base = dd.dist.copy()
        diag = np.diag(np.array(dd.transmissions, dtype=np.int64))
    else:
        base = g.adjacency()
        d = graphs.out_degrees(g) if isinstance(g, Digraph) else graphs.degrees(g)
        diag = np.diag(np.array(d, dtype=np.int64))
    if kind in (MatrixKind.ADJACENCY, MatrixKind.DISTANCE):
        return base
    if kind.is_signed:
        return diag - base
    return diag + base


def build(kind: MatrixKind, g: AnyGraph) -> DenseMatrix:
    return DenseMatrix(build_array(kind, g).astype(float))


def exact_radius(kind: MatrixKind, g: AnyGraph) -> SpectralResult:
    """Spectral radius of ``build(kind, g)``.

    Undirected inputs give symmetric matrices (Jacobi); digraph matrices go
    through general QR since Laplacian-type eigenvalues may be complex.
    """
    m = build(kind, g)
    if isinstance(g, Digraph):
        return spectral_radius_general(m)
    return spectral_radius_symmetric(m)
