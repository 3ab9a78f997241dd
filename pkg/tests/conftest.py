import itertools

import numpy as np
import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from sharpbound.graphs import Digraph, Graph

settings.register_profile("default", max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


@st.composite
def graphs_st(draw, min_n=1, max_n=8):
    n = draw(st.integers(min_n, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    keep = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph(n, frozenset(p for p, k in zip(pairs, keep) if k))


@st.composite
def connected_graphs_st(draw, min_n=1, max_n=8):
    # a random spanning tree plus extra edges keeps every draw connected
    n = draw(st.integers(min_n, max_n))
    edges = set()
    for v in range(1, n):
        u = draw(st.integers(0, v - 1))
        edges.add((u, v))
    pairs = list(itertools.combinations(range(n), 2))
    extra = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    edges |= {p for p, k in zip(pairs, extra) if k}
    return Graph(n, frozenset(edges))


@st.composite
def digraphs_st(draw, min_n=1, max_n=7):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(n) if u != v]
    keep = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Digraph(n, frozenset(p for p, k in zip(pairs, keep) if k))


@st.composite
def strong_digraphs_st(draw, min_n=1, max_n=7):
    # a Hamiltonian cycle through a random ordering guarantees strong connectivity
    n = draw(st.integers(min_n, max_n))
    order = draw(st.permutations(range(n)))
    arcs = {(order[i], order[(i + 1) % n]) for i in range(n)} if n > 1 else set()
    pairs = [(u, v) for u in range(n) for v in range(n) if u != v]
    extra = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    arcs |= {p for p, k in zip(pairs, extra) if k}
    return Digraph(n, frozenset(arcs))


@st.composite
def matrices_st(draw, min_n=1, max_n=8, signed=False, symmetric=False):
    n = draw(st.integers(min_n, max_n))
    lo = -5.0 if signed else 0.0
    vals = draw(st.lists(st.floats(lo, 5.0, allow_nan=False, width=64),
                         min_size=n * n, max_size=n * n))
    sparsity = draw(st.lists(st.booleans(), min_size=n * n, max_size=n * n))
    a = np.where(np.array(sparsity).reshape(n, n), np.array(vals).reshape(n, n), 0.0)
    if symmetric:
        a = np.triu(a) + np.triu(a, 1).T
    return a


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


# criterion number -> (passed, detail); filled by test_acceptance.py
ACCEPTANCE: dict = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(ACCEPTANCE):
        passed, detail = ACCEPTANCE[num]
        terminalreporter.write_line(f"criterion {num}: {'PASS' if passed else 'FAIL'}  {detail}")
