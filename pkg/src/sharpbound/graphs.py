"""Simple graphs and digraphs: degrees, connectivity, distances, classification."""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Optional, Union

import numpy as np

from .errors import Disconnected, InvariantViolation, NotStronglyConnected
from .linalg import strongly_connected


def _check_pairs(n: int, pairs: Iterable, directed: bool) -> frozenset:
    if n < 1:
        raise InvariantViolation(f"vertex count must be positive, got {n}")
    seen = set()
    for u, v in pairs:
        u, v = int(u), int(v)
        if not (0 <= u < n and 0 <= v < n):
            raise InvariantViolation(f"endpoint out of range in ({u}, {v}) for n={n}")
        if u == v:
            raise InvariantViolation(f"loop at vertex {u}")
        key = (u, v) if directed else (min(u, v), max(u, v))
        if key in seen:
            raise InvariantViolation(f"duplicate {'arc' if directed else 'edge'} {key}")
        seen.add(key)
    return frozenset(seen)


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices ``0..n-1``.

    Edges are stored normalised as ``(u, v)`` with ``u < v``.
    """

    n: int
    edges: frozenset = frozenset()

    def __post_init__(self):
        object.__setattr__(self, "edges", _check_pairs(self.n, self.edges, directed=False))

    @property
    def m(self) -> int:
        return len(self.edges)

    def sorted_edges(self) -> list:
        return sorted(self.edges)

    def adjacency(self) -> np.ndarray:
        a = np.zeros((self.n, self.n), dtype=np.int64)
        for u, v in self.edges:
            a[u, v] = a[v, u] = 1
        return a

    def neighbors(self) -> list:
        nbrs = [[] for _ in range(self.n)]
        for u, v in sorted(self.edges):
            nbrs[u].append(v)
            nbrs[v].append(u)
        return [sorted(x) for x in nbrs]


@dataclass(frozen=True)
class Digraph:
    """Simple digraph on vertices ``0..n-1``; arcs are ordered pairs."""

    n: int
    arcs: frozenset = frozenset()

    def __post_init__(self):
        object.__setattr__(self, "arcs", _check_pairs(self.n, self.arcs, directed=True))

    @property
    def m(self) -> int:
        return len(self.arcs)

    def sorted_arcs(self) -> list:
        return sorted(self.arcs)

    def adjacency(self) -> np.ndarray:
        a = np.zeros((self.n, self.n), dtype=np.int64)
        for u, v in self.arcs:
            a[u, v] = 1
        return a

    def out_neighbors(self) -> list:
        nbrs = [[] for _ in range(self.n)]
        for u, v in sorted(self.arcs):
            nbrs[u].append(v)
        return nbrs


AnyGraph = Union[Graph, Digraph]


# -- named families used throughout tests and scripts -----------------------------

def path(n: int) -> Graph:
    return Graph(n, frozenset((i, i + 1) for i in range(n - 1)))


def cycle(n: int) -> Graph:
    return Graph(n, frozenset((i, (i + 1) % n) for i in range(n)))


def complete(n: int) -> Graph:
    return Graph(n, frozenset((i, j) for i in range(n) for j in range(i + 1, n)))


def star(leaves: int) -> Graph:
    """K_{1,leaves} with centre 0."""
    return Graph(leaves + 1, frozenset((0, j) for j in range(1, leaves + 1)))


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph(a + b, frozenset((i, a + j) for i in range(a) for j in range(b)))


def directed_cycle(n: int) -> Digraph:
    return Digraph(n, frozenset((i, (i + 1) % n) for i in range(n)))


def complete_digraph(n: int) -> Digraph:
    return Digraph(n, frozenset((i, j) for i in range(n) for j in range(n) if i != j))


# -- degrees -------------------------------------------------------------------

def degrees(g: Graph) -> tuple:
    d = [0] * g.n
    for u, v in g.edges:
        d[u] += 1
        d[v] += 1
    return tuple(d)


def out_degrees(g: Digraph) -> tuple:
    d = [0] * g.n
    for u, _ in g.arcs:
        d[u] += 1
    return tuple(d)


def neighbor_degree_sums(g: Graph) -> tuple:
    """``S_i``: sum of the degrees of the neighbours of ``i`` (= d_i * m_i)."""
    d = degrees(g)
    s = [0] * g.n
    for u, v in g.edges:
        s[u] += d[v]
        s[v] += d[u]
    return tuple(s)


def average_neighbor_degree(g: Graph) -> tuple:
    """``m_i`` for display only; ``None`` at isolated vertices."""
    return tuple(si / di if di else None for si, di in zip(neighbor_degree_sums(g), degrees(g)))


def in_neighbor_outdegree_sums(g: Digraph) -> tuple:
    """``T_i``: sum of out-degrees over the in-neighbours ``j`` (arcs ``j -> i``)."""
    d = out_degrees(g)
    t = [0] * g.n
    for u, v in g.arcs:
        t[v] += d[u]
    return tuple(t)


def average_out_neighbor_outdegree(g: Digraph) -> tuple:
    """Mean out-degree over the out-neighbours of each vertex.

    Display only; none of the bounds use it. ``None`` where out-degree is 0.
    """
    d = out_degrees(g)
    sums = [0] * g.n
    for u, v in g.arcs:
        sums[u] += d[v]
    return tuple(s / du if du else None for s, du in zip(sums, d))


# -- connectivity ----------------------------------------------------------------

def _bfs(nbrs: list, source: int) -> list:
    dist = [-1] * len(nbrs)
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for v in nbrs[u]:
            if dist[v] < 0:
                dist[v] = dist[u] + 1
                queue.append(v)
    return dist


def is_connected(g: Graph) -> bool:
    return min(_bfs(g.neighbors(), 0)) >= 0


def is_strongly_connected(g: Digraph) -> bool:
    return strongly_connected(g.adjacency().astype(bool))


def components(g: Graph) -> list:
    nbrs = g.neighbors()
    comp = [-1] * g.n
    out = []
    for s in range(g.n):
        if comp[s] >= 0:
            continue
        members = [v for v, d in enumerate(_bfs(nbrs, s)) if d >= 0]
        for v in members:
            comp[v] = len(out)
        out.append(members)
    return out


def is_bipartite(g: Graph) -> Optional[tuple]:
    """Two-colouring by BFS from each uncoloured vertex in ascending order.

    Returns ``(part0, part1)`` as frozensets (vertex 0 lies in ``part0``) or
    ``None`` when an odd cycle exists.
    """
    nbrs = g.neighbors()
    colour = [-1] * g.n
    for s in range(g.n):
        if colour[s] >= 0:
            continue
        colour[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for v in nbrs[u]:
                if colour[v] < 0:
                    colour[v] = 1 - colour[u]
                    queue.append(v)
                elif colour[v] == colour[u]:
                    return None
    return (frozenset(v for v in range(g.n) if colour[v] == 0),
            frozenset(v for v in range(g.n) if colour[v] == 1))


# -- distances -------------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class DistanceData:
    dist: np.ndarray
    transmissions: tuple

    @property
    def column_square_sums(self) -> tuple:
        """``sum_k d_ki^2`` per column, in exact integers."""
        return tuple(int(x) for x in (self.dist.astype(object) ** 2).sum(axis=0))


def distance_matrix(g: AnyGraph) -> DistanceData:
    """All-pairs BFS distances; ``dist[i, j]`` is the distance from i to j."""
    if isinstance(g, Digraph):
        nbrs = g.out_neighbors()
    else:
        nbrs = g.neighbors()
    rows = [_bfs(nbrs, s) for s in range(g.n)]
    if any(d < 0 for row in rows for d in row):
        if isinstance(g, Digraph):
            raise NotStronglyConnected("distance matrix needs a strongly connected digraph")
        raise Disconnected("distance matrix needs a connected graph")
    dist = np.array(rows, dtype=np.int64)
    dist.setflags(write=False)
    return DistanceData(dist, tuple(int(x) for x in dist.sum(axis=1)))


# -- classification --------------------------------------------------------------

@dataclass(frozen=True)
class Regular:
    r: int


@dataclass(frozen=True)
class BipartiteSemiRegular:
    """Bipartite with degree ``r`` on ``parts[0]`` and ``s`` on ``parts[1]``; r > s."""

    r: int
    s: int
    parts: tuple


@dataclass(frozen=True)
class Other:
    pass


GraphClass = Union[Regular, BipartiteSemiRegular, Other]


def classify(g: Graph) -> GraphClass:
    d = degrees(g)
    if len(set(d)) == 1:
        return Regular(d[0])
    if is_bipartite(g) is None:
        return Other()
    # Orient each component's two colour classes so that one global side has
    # degree r and the other degree s. Isolated vertices (degree 0) cannot fit
    # either side once the graph is not regular.
    side_degrees = None
    big, small = set(), set()
    for comp in components(g):
        if len(comp) == 1:
            return Other()
        sub = {v: i for i, v in enumerate(comp)}
        local = Graph(len(comp), frozenset((sub[u], sub[v]) for u, v in g.edges if u in sub))
        sides = [[comp[i] for i in sorted(p)] for p in is_bipartite(local)]
        degs = [{d[v] for v in side} for side in sides]
        if any(len(x) != 1 for x in degs):
            return Other()
        vals = [x.pop() for x in degs]
        if vals[0] < vals[1]:
            sides.reverse()
            vals.reverse()
        if side_degrees is None:
            side_degrees = tuple(vals)
        elif tuple(vals) != side_degrees:
            return Other()
        big.update(sides[0])
        small.update(sides[1])
    r, s = side_degrees
    return BipartiteSemiRegular(r, s, (frozenset(big), frozenset(small)))
