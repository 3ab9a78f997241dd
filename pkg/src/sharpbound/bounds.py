"""Upper bound on the spectral radius from per-index column expressions.

For a nonnegative matrix ``B`` let ``l_k`` count the nonzero off-diagonal
entries of row ``k``. Every index ``i`` gets the expression

    e_i = b_ii + sqrt(sum_{k != i} l_k * b_ki**2)

(column ``i`` weighted by the row counts) and ``rho(B) <= max_i e_i``. When
``B`` is irreducible and the bound is attained, all ``e_i`` coincide; that
necessary condition is what :func:`equality_diagnostic` checks. Signed
matrices are handled through ``|A|``, which dominates ``A`` spectrally.

The graph and digraph specialisations evaluate the same expressions from
degree and distance data with integer radicands.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field, replace
from typing import Optional, Union

import numpy as np

from . import graphs
from .errors import MissingExactRadius
from .graphs import AnyGraph, Digraph, Graph
from .linalg import (DenseMatrix, MatrixLike, require_nonnegative, is_irreducible,
                     spectral_radius_general)
from .spectra import MatrixKind, build, exact_radius


@dataclass(frozen=True)
class Tolerances:
    """Relative tolerances, each scaled by ``max(1, bound)``.

    ``gap_tol`` decides whether the bound is attained, ``eq_tol`` whether the
    per-index expressions coincide, and ``expr_tol`` is the looser spread
    allowed before an attained bound on an irreducible input is flagged.
    """

    gap_tol: float = 1e-8
    eq_tol: float = 1e-9
    expr_tol: float = 1e-6


DEFAULT_TOLERANCES = Tolerances()


@dataclass(frozen=True)
class ExpressionValue:
    index: int
    diag_term: float
    radicand: Union[int, float]
    value: float


@dataclass(frozen=True)
class BoundReport:
    kind: str
    expressions: tuple
    bound: float
    argmax: tuple
    all_equal: bool
    irreducible: bool
    exact_radius: Optional[float] = None
    gap: Optional[float] = None
    tolerances: Tolerances = field(default=DEFAULT_TOLERANCES, compare=False)

    @property
    def values(self) -> tuple:
        return tuple(e.value for e in self.expressions)

    @property
    def spread(self) -> float:
        v = self.values
        return max(v) - min(v)

    def with_exact(self, radius: float) -> "BoundReport":
        return replace(self, exact_radius=float(radius), gap=self.bound - float(radius))

    @property
    def holds(self) -> bool:
        """The inequality itself, within ``gap_tol``."""
        if self.exact_radius is None:
            raise MissingExactRadius(f"{self.kind} report has no exact radius")
        return self.exact_radius <= self.bound + self.tolerances.gap_tol * max(1.0, self.bound)


def _report(kind: str, diag, radicands, irreducible: bool, tol: Tolerances) -> BoundReport:
    radicands = [s if isinstance(s, int) else float(s) for s in radicands]
    exprs = tuple(ExpressionValue(i, float(c), s, float(c) + math.sqrt(s))
                  for i, (c, s) in enumerate(zip(diag, radicands)))
    values = [e.value for e in exprs]
    bound = max(values)
    scale = max(1.0, bound)
    argmax = tuple(i for i, v in enumerate(values) if v >= bound - tol.eq_tol * scale)
    all_equal = bound - min(values) <= tol.eq_tol * scale
    return BoundReport(kind, exprs, bound, argmax, all_equal, irreducible, tolerances=tol)


def row_support_counts(a: np.ndarray) -> np.ndarray:
    """``l_k``: nonzero off-diagonal entries per row (exact ``!= 0``)."""
    nz = a != 0
    np.fill_diagonal(nz, False)
    return nz.sum(axis=1)


def _column_radicands(a: np.ndarray) -> np.ndarray:
    sq = a * a
    np.fill_diagonal(sq, 0.0)
    return row_support_counts(a).astype(float) @ sq


def general_bound(b: MatrixLike, exact: bool = True,
                  tolerances: Tolerances = DEFAULT_TOLERANCES) -> BoundReport:
    """Bound for a nonnegative matrix; ``exact`` also computes rho(B) by QR."""
    m = DenseMatrix.coerce(b)
    a = m.data
    require_nonnegative(a)
    report = _report("general", np.diag(a), _column_radicands(a), is_irreducible(m), tolerances)
    if exact:
        report = report.with_exact(spectral_radius_general(m).radius)
    return report


def modulus_bound(a: MatrixLike, exact: bool = True,
                  tolerances: Tolerances = DEFAULT_TOLERANCES) -> BoundReport:
    """Bound for a matrix with entries of any sign, evaluated on ``|A|``.

    The exact radius is that of ``A`` itself, not of ``|A|``.
    """
    m = DenseMatrix.coerce(a)
    absd = np.abs(m.data)
    report = _report("modulus", np.diag(absd), _column_radicands(absd), is_irreducible(m),
                     tolerances)
    if exact:
        report = report.with_exact(spectral_radius_general(m).radius)
    return report


def graph_bound(kind: MatrixKind, g: Graph, exact: bool = True,
                tolerances: Tolerances = DEFAULT_TOLERANCES) -> BoundReport:
    """Closed-form specialisation for one of the six matrices of a graph.

    adjacency: sqrt(S_i); (signless) Laplacian: d_i + sqrt(S_i);
    distance: sqrt((n-1) sum_k d_ki^2); distance (signless) Laplacian:
    D_i + sqrt((n-1) sum_k d_ki^2). ``S_i`` is the neighbour degree sum.
    """
    kind = MatrixKind(kind)
    if kind.is_distance:
        dd = graphs.distance_matrix(g)
        radicands = [(g.n - 1) * c for c in dd.column_square_sums]
        diag = dd.transmissions if kind != MatrixKind.DISTANCE else [0] * g.n
        irreducible = True
    else:
        radicands = graphs.neighbor_degree_sums(g)
        diag = graphs.degrees(g) if kind != MatrixKind.ADJACENCY else [0] * g.n
        irreducible = graphs.is_connected(g)
    report = _report(f"graph:{kind.value}", diag, radicands, irreducible, tolerances)
    if exact:
        report = report.with_exact(exact_radius(kind, g).radius)
    return report


def digraph_bound(kind: MatrixKind, g: Digraph, exact: bool = True,
                  tolerances: Tolerances = DEFAULT_TOLERANCES) -> BoundReport:
    """Closed-form specialisation for one of the six matrices of a digraph.

    Uses out-degrees ``d_i^+``, the in-neighbour out-degree sums ``T_i`` and
    directed distances ``d_ki`` (from k to i).
    """
    kind = MatrixKind(kind)
    if kind.is_distance:
        dd = graphs.distance_matrix(g)
        radicands = [(g.n - 1) * c for c in dd.column_square_sums]
        diag = dd.transmissions if kind != MatrixKind.DISTANCE else [0] * g.n
        irreducible = True
    else:
        radicands = graphs.in_neighbor_outdegree_sums(g)
        diag = graphs.out_degrees(g) if kind != MatrixKind.ADJACENCY else [0] * g.n
        irreducible = graphs.is_strongly_connected(g)
    report = _report(f"digraph:{kind.value}", diag, radicands, irreducible, tolerances)
    if exact:
        report = report.with_exact(exact_radius(kind, g).radius)
    return report


def bound_for(kind: MatrixKind, g: AnyGraph, exact: bool = True,
              tolerances: Tolerances = DEFAULT_TOLERANCES) -> BoundReport:
    if isinstance(g, Digraph):
        return digraph_bound(kind, g, exact, tolerances)
    return graph_bound(kind, g, exact, tolerances)


def applicable_kinds(g: AnyGraph) -> list:
    """Kinds whose matrix is defined for ``g`` (distance kinds need connectivity)."""
    connected = (graphs.is_strongly_connected(g) if isinstance(g, Digraph)
                 else graphs.is_connected(g))
    return [k for k in MatrixKind if connected or not k.is_distance]


@dataclass(frozen=True)
class DiagnosticVerdict:
    equality_holds: bool
    all_expressions_equal: bool
    irreducible: bool
    violation: bool


def equality_diagnostic(report: BoundReport, irreducible: Optional[bool] = None,
                        tolerances: Optional[Tolerances] = None) -> DiagnosticVerdict:
    """Check the necessary condition for equality on an irreducible input.

    A violation means: irreducible, the bound is attained within ``gap_tol``,
    yet the expressions spread by more than ``expr_tol``. Equal expressions
    do not certify equality.
    """
    if report.exact_radius is None:
        raise MissingExactRadius(f"{report.kind} report has no exact radius")
    tol = tolerances or report.tolerances
    irreducible = report.irreducible if irreducible is None else irreducible
    scale = max(1.0, report.bound)
    holds = abs(report.gap) <= tol.gap_tol * scale
    equal = report.spread <= tol.expr_tol * scale
    return DiagnosticVerdict(holds, equal, irreducible, irreducible and holds and not equal)


def specialization_check(g: AnyGraph) -> list:
    """Max per-index discrepancy between each specialised bound and the
    generic bound evaluated on the built matrix, for every applicable kind."""
    out = []
    for kind in applicable_kinds(g):
        special = bound_for(kind, g, exact=False)
        m = build(kind, g)
        generic = (modulus_bound(m, exact=False) if kind.is_signed
                   else general_bound(m, exact=False))
        disc = max(abs(a - b) for a, b in zip(special.values, generic.values))
        out.append((kind, disc))
    return out
