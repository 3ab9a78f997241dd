"""Text formats: edge lists for (di)graphs and Matrix Market for matrices.

Edge list::

    # comments start with '#'
    graph 3 2        (or: digraph n m)
    0 1
    1 2

Matrix Market: ``%%MatrixMarket matrix coordinate real general`` with
1-based ``i j value`` triples, or ``... array real general`` with the entries
listed column by column.
"""
from __future__ import annotations

from typing import Union

import numpy as np

from .errors import InvariantViolation, NonSquare, ParseError
from .graphs import AnyGraph, Digraph, Graph
from .linalg import DenseMatrix

Instance = Union[Graph, Digraph, DenseMatrix]

MM_BANNER = "%%MatrixMarket"


def _content_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line


def _int(tok: str, lineno: int) -> int:
    try:
        return int(tok)
    except ValueError:
        raise ParseError(f"expected an integer, got {tok!r}", lineno) from None


def parse_graph(text: str) -> AnyGraph:
    lines = list(_content_lines(text))
    if not lines:
        raise ParseError("empty input", 1)
    lineno, header = lines[0]
    toks = header.split()
    if len(toks) != 3 or toks[0] not in ("graph", "digraph"):
        raise ParseError("header must be 'graph n m' or 'digraph n m'", lineno)
    directed = toks[0] == "digraph"
    n, m = _int(toks[1], lineno), _int(toks[2], lineno)
    if n < 1:
        raise InvariantViolation(f"vertex count must be positive, got {n}", lineno)
    body = lines[1:]
    if len(body) != m:
        raise ParseError(f"header announces {m} {'arcs' if directed else 'edges'}, "
                         f"found {len(body)}", lines[-1][0] if body else lineno)
    seen = set()
    for lineno, line in body:
        toks = line.split()
        if len(toks) != 2:
            raise ParseError("expected 'u v'", lineno)
        u, v = _int(toks[0], lineno), _int(toks[1], lineno)
        if not (0 <= u < n and 0 <= v < n):
            raise InvariantViolation(f"vertex out of range [0, {n}) in ({u}, {v})", lineno)
        if u == v:
            raise InvariantViolation(f"loop at vertex {u}", lineno)
        key = (u, v) if directed else (min(u, v), max(u, v))
        if key in seen:
            raise InvariantViolation(f"duplicate {'arc' if directed else 'edge'} {key}", lineno)
        seen.add(key)
    return Digraph(n, frozenset(seen)) if directed else Graph(n, frozenset(seen))


def serialize_graph(g: AnyGraph) -> str:
    if isinstance(g, Digraph):
        pairs, head = g.sorted_arcs(), "digraph"
    else:
        pairs, head = g.sorted_edges(), "graph"
    return "".join([f"{head} {g.n} {len(pairs)}\n"] + [f"{u} {v}\n" for u, v in pairs])


def _float(tok: str, lineno: int) -> float:
    try:
        x = float(tok)
    except ValueError:
        raise ParseError(f"expected a real number, got {tok!r}", lineno) from None
    if not np.isfinite(x):
        raise ParseError(f"non-finite entry {tok!r}", lineno)
    return x


def parse_matrix(text: str) -> DenseMatrix:
    raw = text.splitlines()
    if not raw or not raw[0].startswith(MM_BANNER):
        raise ParseError("missing %%MatrixMarket header", 1)
    banner = raw[0].lower().split()
    if len(banner) != 5 or banner[1] != "matrix" or banner[2] not in ("coordinate", "array"):
        raise ParseError("expected 'matrix coordinate|array real general'", 1)
    if banner[3] not in ("real", "integer") or banner[4] != "general":
        raise ParseError(f"unsupported field/symmetry {banner[3]} {banner[4]}", 1)
    layout = banner[2]
    lines = [(i, ln.strip()) for i, ln in enumerate(raw[1:], start=2)
             if ln.strip() and not ln.lstrip().startswith("%")]
    if not lines:
        raise ParseError("missing size line", len(raw))
    lineno, size = lines[0]
    toks = size.split()
    if layout == "coordinate":
        if len(toks) != 3:
            raise ParseError("size line must be 'rows cols nnz'", lineno)
        rows, cols, nnz = (_int(t, lineno) for t in toks)
    else:
        if len(toks) != 2:
            raise ParseError("size line must be 'rows cols'", lineno)
        rows, cols = (_int(t, lineno) for t in toks)
        nnz = rows * cols
    if rows != cols:
        raise NonSquare(f"matrix is {rows}x{cols}")
    if rows < 1:
        raise ParseError("matrix dimension must be positive", lineno)
    body = lines[1:]
    if len(body) != nnz:
        raise ParseError(f"expected {nnz} entries, found {len(body)}",
                         body[-1][0] if body else lineno)
    a = np.zeros((rows, cols))
    if layout == "array":
        vals = []
        for lineno, line in body:
            toks = line.split()
            if len(toks) != 1:
                raise ParseError("array entries are one value per line", lineno)
            vals.append(_float(toks[0], lineno))
        a[:] = np.array(vals).reshape(cols, rows).T
    else:
        seen = set()
        for lineno, line in body:
            toks = line.split()
            if len(toks) != 3:
                raise ParseError("coordinate entries are 'i j value'", lineno)
            i, j = _int(toks[0], lineno), _int(toks[1], lineno)
            if not (1 <= i <= rows and 1 <= j <= cols):
                raise ParseError(f"index ({i}, {j}) out of range", lineno)
            if (i, j) in seen:
                raise ParseError(f"duplicate entry ({i}, {j})", lineno)
            seen.add((i, j))
            a[i - 1, j - 1] = _float(toks[2], lineno)
    return DenseMatrix(a)


def serialize_matrix(m: DenseMatrix, layout: str = "coordinate") -> str:
    a = DenseMatrix.coerce(m).data
    n = a.shape[0]
    if layout == "array":
        vals = [repr(float(x)) for x in a.T.ravel()]
        return "".join([f"{MM_BANNER} matrix array real general\n", f"{n} {n}\n"]
                       + [v + "\n" for v in vals])
    nz = [(i, j) for i in range(n) for j in range(n) if a[i, j] != 0]
    return "".join([f"{MM_BANNER} matrix coordinate real general\n", f"{n} {n} {len(nz)}\n"]
                   + [f"{i + 1} {j + 1} {float(a[i, j])!r}\n" for i, j in nz])


def parse(text: str) -> Instance:
    """Dispatch on content: Matrix Market banner or edge-list header."""
    if text.lstrip().startswith(MM_BANNER):
        return parse_matrix(text.lstrip())
    return parse_graph(text)


def serialize(x: Instance) -> str:
    if isinstance(x, (Graph, Digraph)):
        return serialize_graph(x)
    return serialize_matrix(x)
