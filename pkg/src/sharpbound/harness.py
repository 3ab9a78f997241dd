"""Random and exhaustive instance generation plus property-suite execution.

Every trial draws from its own generator seeded by
``SeedSequence(entropy=seed, spawn_key=(trial_index,))``, so a violation
can be replayed from ``(seed, trial_index)`` alone.
"""
from __future__ import annotations

import itertools
import json
import math
import time
from dataclasses import dataclass, field
from typing import Callable, Iterable, Iterator, Optional, Union

import numpy as np

from . import graphs
from .bounds import (DEFAULT_TOLERANCES, Tolerances, applicable_kinds, bound_for,
                     equality_diagnostic, general_bound, modulus_bound, specialization_check)
from .errors import GenerationExhausted, NotReproducible, SizeTooLarge
from .formats import Instance, serialize
from .graphs import Digraph, Graph
from .linalg import (DenseMatrix, entrywise_abs, is_irreducible, row_sum_interval,
                     spectral_radii_symmetric, spectral_radius_general,
                     spectral_radius_nonnegative, spectral_radius_symmetric)
from .spectra import MatrixKind, build, build_array

MODELS = ("gnp", "random-regular", "bipartite-semiregular", "digraph-gnp",
          "nonneg-matrix", "signed-matrix")
GRAPH_MODELS = ("gnp", "random-regular", "bipartite-semiregular")
RETRY_CAP = 1000
MAX_ENUMERATION_N = 7


@dataclass(frozen=True)
class TrialConfig:
    """One generator configuration.

    ``density`` is the edge/arc probability for the gnp models and the
    nonzero probability for matrix models; ``degree`` is the common degree
    of the random-regular model. ``connected`` conditions graph models on
    (strong) connectivity and matrix models on irreducibility; ``None``
    means on for graph models, off for matrix models.
    """

    model: str = "gnp"
    size_range: tuple = (1, 10)
    density: float = 0.5
    degree: int = 3
    trials: int = 100
    seed: int = 0
    tolerances: Tolerances = DEFAULT_TOLERANCES
    connected: Optional[bool] = None

    def __post_init__(self):
        if self.model not in MODELS:
            raise ValueError(f"unknown model {self.model!r}; expected one of {MODELS}")
        lo, hi = self.size_range
        if not 1 <= lo <= hi:
            raise ValueError(f"invalid size range {self.size_range}")
        object.__setattr__(self, "size_range", (int(lo), int(hi)))
        if self.trials < 1:
            raise ValueError("trials must be >= 1")
        if not 0.0 < self.density <= 1.0:
            raise ValueError(f"density must lie in (0, 1], got {self.density}")
        if self.degree < 0:
            raise ValueError("degree must be nonnegative")

    @property
    def require_connected(self) -> bool:
        if self.connected is None:
            return self.model not in ("nonneg-matrix", "signed-matrix")
        return self.connected


def trial_rng(seed: int, trial_index: int) -> np.random.Generator:
    return np.random.default_rng(np.random.SeedSequence(entropy=seed, spawn_key=(trial_index,)))


# -- generators -----------------------------------------------------------------

def _gnp(rng, n, p, connected):
    pairs = list(itertools.combinations(range(n), 2))
    for _ in range(RETRY_CAP):
        keep = rng.random(len(pairs)) < p
        g = Graph(n, frozenset(e for e, k in zip(pairs, keep) if k))
        if not connected or graphs.is_connected(g):
            return g
    raise GenerationExhausted(f"no connected G({n}, {p}) in {RETRY_CAP} attempts")


def _digraph_gnp(rng, n, p, connected):
    pairs = [(u, v) for u in range(n) for v in range(n) if u != v]
    for _ in range(RETRY_CAP):
        keep = rng.random(len(pairs)) < p
        g = Digraph(n, frozenset(e for e, k in zip(pairs, keep) if k))
        if not connected or graphs.is_strongly_connected(g):
            return g
    raise GenerationExhausted(f"no strongly connected D({n}, {p}) in {RETRY_CAP} attempts")


def _random_regular(rng, lo, hi, r, connected):
    sizes = [n for n in range(lo, hi + 1) if n > r and (n * r) % 2 == 0]
    if connected:
        sizes = [n for n in sizes if r >= 2 or n == r + 1]
    if not sizes:
        raise GenerationExhausted(f"no admissible size in {lo}..{hi} for degree {r}")
    n = int(rng.choice(sizes))
    for _ in range(RETRY_CAP):
        # pairing model: shuffle n*r half-edges and pair them up
        points = rng.permutation(np.repeat(np.arange(n), r))
        edges = set()
        ok = True
        for u, v in points.reshape(-1, 2).tolist():
            e = (min(u, v), max(u, v))
            if u == v or e in edges:
                ok = False
                break
            edges.add(e)
        if not ok:
            continue
        g = Graph(n, frozenset(edges))
        if not connected or graphs.is_connected(g):
            return g
    raise GenerationExhausted(f"pairing model failed for n={n}, r={r}")


def _semiregular_shapes(n, connected):
    shapes = []
    for a in range(1, n):
        b = n - a
        for r in range(1, b + 1):
            if (a * r) % b:
                continue
            s = a * r // b
            if 1 <= s <= a and (not connected or a * r >= n - 1):
                shapes.append((a, b, r, s))
    return shapes


def _bipartite_semiregular(rng, lo, hi, connected):
    options = [(n, sh) for n in range(max(lo, 2), hi + 1) for sh in _semiregular_shapes(n, connected)]
    if not options:
        raise GenerationExhausted(f"no bipartite semi-regular shape with n in {lo}..{hi}")
    n, (a, b, r, s) = options[int(rng.integers(len(options)))]
    # Row i of the a x b biadjacency gets columns (i*r + t) mod b: rows sum to r,
    # columns to s. Checkerboard swaps then randomise while keeping the margins.
    base = np.zeros((a, b), dtype=bool)
    for i in range(a):
        base[i, [(i * r + t) % b for t in range(r)]] = True
    for _ in range(RETRY_CAP):
        m = base.copy()
        for _ in range(4 * a * b):
            i1, i2 = rng.integers(a, size=2)
            j1, j2 = rng.integers(b, size=2)
            if m[i1, j1] and m[i2, j2] and not m[i1, j2] and not m[i2, j1]:
                m[i1, j1] = m[i2, j2] = False
                m[i1, j2] = m[i2, j1] = True
        g = Graph(n, frozenset((int(i), a + int(j)) for i, j in zip(*np.nonzero(m))))
        if not connected or graphs.is_connected(g):
            return g
    raise GenerationExhausted(f"no connected semi-regular graph for shape {(a, b, r, s)}")


def _matrix(rng, n, density, signed, irreducible):
    mask = rng.random((n, n)) < density
    if irreducible and n > 1:
        # overlay a random Hamiltonian cycle so sparse draws stay irreducible
        order = rng.permutation(n)
        mask[order, np.roll(order, -1)] = True
    vals = rng.uniform(-1.0, 1.0, (n, n)) if signed else rng.random((n, n))
    # uniform draws of exactly 0 are possible in principle; keep the support intact
    vals = np.where(vals == 0.0, 0.5, vals)
    m = DenseMatrix(np.where(mask, vals, 0.0))
    if irreducible and not is_irreducible(m):
        raise GenerationExhausted(f"irreducible {n}x{n} draw failed")
    return m


def generate(config: TrialConfig, trial_index: int) -> Instance:
    """Deterministic instance for ``(config.seed, trial_index)``."""
    rng = trial_rng(config.seed, trial_index)
    lo, hi = config.size_range
    conn = config.require_connected
    if config.model == "random-regular":
        return _random_regular(rng, lo, hi, config.degree, conn)
    if config.model == "bipartite-semiregular":
        return _bipartite_semiregular(rng, lo, hi, conn)
    n = int(rng.integers(lo, hi + 1))
    if config.model == "gnp":
        return _gnp(rng, n, config.density, conn)
    if config.model == "digraph-gnp":
        return _digraph_gnp(rng, n, config.density, conn)
    return _matrix(rng, n, config.density, config.model == "signed-matrix", conn)


# -- properties -----------------------------------------------------------------

class Skip(Exception):
    """The property does not apply to this instance."""


@dataclass(frozen=True)
class Property:
    id: str
    description: str
    check: Callable[[Instance, Tolerances], Optional[dict]]
    """Returns ``None`` when the property holds, else the observed values."""


def _scale(x):
    return max(1.0, abs(x))


def _observed(report):
    return {"bound": report.bound, "exact_radius": report.exact_radius,
            "expressions": list(report.values)}


def _matrix_only(x, nonneg=False):
    if not isinstance(x, DenseMatrix):
        raise Skip
    if nonneg and np.any(x.data < 0):
        raise Skip
    return x


def _graph_only(x, connected=True):
    if not isinstance(x, Graph):
        raise Skip
    if connected and not graphs.is_connected(x):
        raise Skip
    return x


def _check_general(x, tol):
    r = general_bound(_matrix_only(x, nonneg=True), tolerances=tol)
    return None if r.holds else _observed(r)


def _check_modulus(x, tol):
    r = modulus_bound(_matrix_only(x), tolerances=tol)
    return None if r.holds else _observed(r)


def _check_domination(x, tol):
    m = _matrix_only(x)
    ra = spectral_radius_general(m).radius
    rabs = spectral_radius_general(entrywise_abs(m)).radius
    if ra <= rabs + tol.gap_tol * _scale(rabs):
        return None
    return {"radius": ra, "abs_radius": rabs}


def _check_row_sums(x, tol):
    m = _matrix_only(x, nonneg=True)
    lo, hi = row_sum_interval(m)
    rho = spectral_radius_general(m).radius
    eps = tol.gap_tol * _scale(hi)
    bad = not (lo - eps <= rho <= hi + eps)
    if is_irreducible(m) and hi - lo <= 1e-12 * _scale(hi):
        bad = bad or abs(rho - hi) > eps
    return {"min_row_sum": lo, "max_row_sum": hi, "radius": rho} if bad else None


def _graph_reports(x, tol):
    if not isinstance(x, (Graph, Digraph)):
        raise Skip
    return [bound_for(k, x, tolerances=tol) for k in applicable_kinds(x)]


def _check_graph_bounds(x, tol):
    if not isinstance(x, Graph):
        raise Skip
    bad = {r.kind: _observed(r) for r in _graph_reports(x, tol) if not r.holds}
    return bad or None


def _check_digraph_bounds(x, tol):
    if not isinstance(x, Digraph):
        raise Skip
    bad = {r.kind: _observed(r) for r in _graph_reports(x, tol) if not r.holds}
    return bad or None


def _check_equality_necessary(x, tol):
    if isinstance(x, DenseMatrix):
        reports = [general_bound(x, tolerances=tol) if np.all(x.data >= 0)
                   else modulus_bound(x, tolerances=tol)]
    else:
        reports = _graph_reports(x, tol)
    bad = {r.kind: _observed(r) for r in reports if equality_diagnostic(r).violation}
    return bad or None


SPECIALIZATION_TOL = 1e-10


def _check_specialization(x, tol):
    if not isinstance(x, (Graph, Digraph)):
        raise Skip
    bad = {k.value: d for k, d in specialization_check(x) if not d <= SPECIALIZATION_TOL}
    return bad or None


def _gap_zero(report, tol):
    return report.gap <= tol.gap_tol * _scale(report.bound)


def _check_laplacian_signless(x, tol):
    g = _graph_only(x)
    mu = spectral_radius_symmetric(build(MatrixKind.LAPLACIAN, g)).radius
    q = spectral_radius_symmetric(build(MatrixKind.SIGNLESS_LAPLACIAN, g)).radius
    eps = tol.gap_tol * _scale(q)
    bipartite = graphs.is_bipartite(g) is not None
    if mu <= q + eps and (abs(mu - q) <= eps) == bipartite:
        return None
    return {"mu": mu, "q": q, "bipartite": bipartite}


def _equivalence(kind, predicate):
    def check(x, tol):
        g = _graph_only(x)
        r = bound_for(kind, g, tolerances=tol)
        cls = graphs.classify(g)
        attained, expected = _gap_zero(r, tol), predicate(g, cls)
        if attained == expected:
            return None
        return {**_observed(r), "gap": r.gap, "class": type(cls).__name__}
    return check


def _is_regular(g, cls):
    return isinstance(cls, graphs.Regular)


def _is_semiregular(g, cls):
    return isinstance(cls, (graphs.Regular, graphs.BipartiteSemiRegular))


def _is_bipartite_regular(g, cls):
    return isinstance(cls, graphs.Regular) and graphs.is_bipartite(g) is not None


def _check_neighbor_sums(x, tol):
    g = _graph_only(x)
    constant = len(set(graphs.neighbor_degree_sums(g))) == 1
    cls = graphs.classify(g)
    if constant == _is_semiregular(g, cls):
        return None
    return {"S": list(graphs.neighbor_degree_sums(g)), "class": type(cls).__name__}


DEGREE_EXPR_TOL = 1e-12


def degree_expressions(g: Graph) -> list:
    return [d + math.sqrt(s) for d, s in zip(graphs.degrees(g), graphs.neighbor_degree_sums(g))]


def _check_degree_expressions(x, tol):
    g = _graph_only(x)
    e = degree_expressions(g)
    constant = max(e) - min(e) <= DEGREE_EXPR_TOL
    cls = graphs.classify(g)
    if constant == _is_regular(g, cls):
        return None
    return {"expressions": e, "class": type(cls).__name__}


def _check_solver_agreement(x, tol):
    checks = []
    if isinstance(x, DenseMatrix):
        if np.allclose(x.data, x.data.T, rtol=0, atol=1e-12):
            checks.append(("jacobi", x))
        if np.all(x.data >= 0) and is_irreducible(x):
            checks.append(("power", x))
    elif isinstance(x, Graph):
        checks += [("jacobi", build(k, x)) for k in applicable_kinds(x)]
    elif isinstance(x, Digraph) and graphs.is_strongly_connected(x):
        checks += [("power", build(k, x)) for k in applicable_kinds(x) if not k.is_signed]
    if not checks:
        raise Skip
    bad = {}
    for i, (method, m) in enumerate(checks):
        qr = spectral_radius_general(m).radius
        other = (spectral_radius_symmetric(m) if method == "jacobi"
                 else spectral_radius_nonnegative(m)).radius
        if abs(other - qr) > 1e-8 * _scale(qr):
            bad[f"{method}-{i}"] = {"qr": qr, method: other}
    return bad or None


PROPERTIES = {p.id: p for p in [
    Property("general-bound", "nonnegative matrix: rho(B) <= max_i e_i", _check_general),
    Property("modulus-bound", "any matrix: rho(A) <= bound evaluated on |A|", _check_modulus),
    Property("abs-domination", "rho(A) <= rho(|A|)", _check_domination),
    Property("row-sum-sandwich", "min row sum <= rho <= max row sum", _check_row_sums),
    Property("graph-bounds", "all six graph bounds dominate their radii", _check_graph_bounds),
    Property("digraph-bounds", "all six digraph bounds dominate their radii",
             _check_digraph_bounds),
    Property("equality-necessary", "attained bound on irreducible input => equal expressions",
             _check_equality_necessary),
    Property("specialization", "closed forms equal the generic expressions on built matrices",
             _check_specialization),
    Property("laplacian-vs-signless", "mu <= q, equality iff bipartite",
             _check_laplacian_signless),
    Property("adjacency-equality", "adjacency bound attained iff regular or semi-regular",
             _equivalence(MatrixKind.ADJACENCY, _is_semiregular)),
    Property("signless-equality", "signless Laplacian bound attained iff regular",
             _equivalence(MatrixKind.SIGNLESS_LAPLACIAN, _is_regular)),
    Property("laplacian-equality", "Laplacian bound attained iff bipartite regular",
             _equivalence(MatrixKind.LAPLACIAN, _is_bipartite_regular)),
    Property("neighbor-sum-regularity", "S_i constant iff regular or semi-regular",
             _check_neighbor_sums),
    Property("degree-sum-regularity", "d_i + sqrt(S_i) constant iff regular",
             _check_degree_expressions),
    Property("solver-agreement", "Jacobi / power iteration agree with general QR",
             _check_solver_agreement),
]}

SOUNDNESS = ("general-bound", "modulus-bound", "graph-bounds", "digraph-bounds")


def evaluate(prop: Property, instance: Instance, tol: Tolerances) -> Optional[dict]:
    """Run one property: ``None`` on pass, observed values on failure.

    Raises :class:`Skip` when not applicable. Solver errors count as failures.
    """
    try:
        return prop.check(instance, tol)
    except Skip:
        raise
    except Exception as exc:  # noqa: BLE001 - any crash is a reportable violation
        return {"error": f"{type(exc).__name__}: {exc}"}


# -- suite ------------------------------------------------------------------------

@dataclass(frozen=True)
class Violation:
    property_id: str
    instance: Instance
    observed: dict
    trial_seed: tuple
    tolerances: Tolerances = field(default=DEFAULT_TOLERANCES, compare=False)

    @property
    def serialized(self) -> str:
        return serialize(self.instance)

    def to_dict(self) -> dict:
        return {"property": self.property_id, "instance": self.serialized,
                "observed": _jsonable(self.observed),
                "trial_seed": {"seed": self.trial_seed[0], "trial": self.trial_seed[1]}}


@dataclass
class SuiteResult:
    counts: dict
    violations: list
    wall_time: float
    config: Optional[TrialConfig] = None

    @property
    def fail_count(self) -> int:
        return sum(c["fail"] for c in self.counts.values())

    @property
    def ok(self) -> bool:
        return self.fail_count == 0

    def to_dict(self, include_time: bool = False) -> dict:
        out = {"counts": self.counts, "violations": [v.to_dict() for v in self.violations],
               "ok": self.ok}
        if self.config is not None:
            c = self.config
            out["config"] = {"model": c.model, "size_range": list(c.size_range),
                             "density": c.density, "degree": c.degree, "trials": c.trials,
                             "seed": c.seed, "connected": c.require_connected,
                             "tolerances": {"gap": c.tolerances.gap_tol,
                                            "eq": c.tolerances.eq_tol,
                                            "expr": c.tolerances.expr_tol}}
        if include_time:
            out["wall_time"] = self.wall_time
        return out

    def to_json(self, include_time: bool = False) -> str:
        return json.dumps(_jsonable(self.to_dict(include_time)), sort_keys=True, indent=2)


def _jsonable(x):
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if isinstance(x, (bool, np.bool_)):
        return bool(x)
    if isinstance(x, (int, np.integer)):
        return int(x)
    if isinstance(x, (float, np.floating)):
        return float(f"{float(x):.9g}")
    return x


def run_suite(config: TrialConfig, properties: Optional[Iterable[str]] = None,
              registry: Optional[dict] = None, shrink_violations: bool = True) -> SuiteResult:
    """Run each property on each of ``config.trials`` generated instances.

    ``properties=None`` runs the whole registry; an empty collection skips
    everything. Generation failures count as skips.
    """
    registry = PROPERTIES if registry is None else registry
    ids = list(registry) if properties is None else sorted(set(properties))
    for pid in ids:
        if pid not in registry:
            raise KeyError(f"unknown property {pid!r}")
    counts = {pid: {"pass": 0, "fail": 0, "skip": 0} for pid in ids}
    violations = []
    start = time.perf_counter()
    for t in range(config.trials):
        if not ids:
            continue
        try:
            inst = generate(config, t)
        except GenerationExhausted:
            for pid in ids:
                counts[pid]["skip"] += 1
            continue
        for pid in ids:
            try:
                obs = evaluate(registry[pid], inst, config.tolerances)
            except Skip:
                counts[pid]["skip"] += 1
                continue
            if obs is None:
                counts[pid]["pass"] += 1
            else:
                counts[pid]["fail"] += 1
                violations.append(Violation(pid, inst, obs, (config.seed, t), config.tolerances))
    if not ids:
        counts = {}
    if shrink_violations:
        shrunk, seen = [], set()
        for v in violations:
            s = shrink(v, registry)
            key = (s.property_id, s.serialized)
            if key not in seen:
                seen.add(key)
                shrunk.append(s)
        violations = shrunk
    violations.sort(key=lambda v: (v.trial_seed[1], v.property_id))
    return SuiteResult(counts, violations, time.perf_counter() - start, config)


# -- shrinking --------------------------------------------------------------------

def _delete_vertex(x: Instance, v: int) -> Instance:
    if isinstance(x, DenseMatrix):
        keep = [i for i in range(x.n) if i != v]
        return DenseMatrix(x.data[np.ix_(keep, keep)])
    relabel = lambda u: u - (u > v)  # noqa: E731
    pairs = x.arcs if isinstance(x, Digraph) else x.edges
    kept = frozenset((relabel(a), relabel(b)) for a, b in pairs if v not in (a, b))
    return type(x)(x.n - 1, kept)


def _shrink_candidates(x: Instance) -> Iterator[Instance]:
    if x.n > 1:
        for v in range(x.n):
            yield _delete_vertex(x, v)
    if isinstance(x, DenseMatrix):
        for i, j in zip(*np.nonzero(x.data)):
            a = x.data.copy()
            a[i, j] = 0.0
            yield DenseMatrix(a)
    else:
        pairs = sorted(x.arcs if isinstance(x, Digraph) else x.edges)
        for e in pairs:
            yield type(x)(x.n, frozenset(p for p in pairs if p != e))


def _fails(prop: Property, x: Instance, tol: Tolerances) -> Optional[dict]:
    try:
        return evaluate(prop, x, tol)
    except Skip:
        return None


def shrink(v: Violation, registry: Optional[dict] = None) -> Violation:
    """Greedy minimisation: delete vertices, edges/arcs or matrix entries
    while the same property still fails. Candidates on which the property
    does not apply (e.g. lost connectivity) are rejected."""
    registry = PROPERTIES if registry is None else registry
    prop = registry[v.property_id]
    current, obs = v.instance, _fails(prop, v.instance, v.tolerances)
    if obs is None:
        raise NotReproducible(f"{v.property_id} holds on the stored instance")
    progress = True
    while progress:
        progress = False
        for cand in _shrink_candidates(current):
            cand_obs = _fails(prop, cand, v.tolerances)
            if cand_obs is not None:
                current, obs, progress = cand, cand_obs, True
                break
    return Violation(v.property_id, current, obs, v.trial_seed, v.tolerances)


# -- exhaustive enumeration -------------------------------------------------------

def graphs_on(n: int, connected_only: bool = True) -> Iterator[Graph]:
    """All labelled simple graphs on exactly ``n`` vertices, by edge subset."""
    if n > MAX_ENUMERATION_N:
        raise SizeTooLarge(f"n={n} exceeds {MAX_ENUMERATION_N}")
    pairs = list(itertools.combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        g = Graph(n, frozenset(p for b, p in enumerate(pairs) if mask >> b & 1))
        if not connected_only or graphs.is_connected(g):
            yield g


def enumerate_small_graphs(max_n: int, connected_only: bool = True,
                           min_n: int = 1) -> Iterator[Graph]:
    """All labelled graphs with ``min_n <= n <= max_n`` (``max_n <= 7``)."""
    if max_n > MAX_ENUMERATION_N:
        raise SizeTooLarge(f"max_n={max_n} exceeds {MAX_ENUMERATION_N}")
    for n in range(max(1, min_n), max_n + 1):
        yield from graphs_on(n, connected_only)


# -- equality search ----------------------------------------------------------------

def equality_case_search(config: TrialConfig,
                         kinds: Optional[Iterable[MatrixKind]] = None) -> list:
    """Generated instances whose bound is attained within ``gap_tol``.

    Returns ``(instance, kind, gap)`` triples; ``kind`` is a
    :class:`MatrixKind` for graphs and ``"general"``/``"modulus"`` for
    matrices. Purely exploratory: nothing is asserted.
    """
    tol = config.tolerances
    wanted = None if kinds is None else {MatrixKind(k) for k in kinds}
    found = []
    for t in range(config.trials):
        try:
            inst = generate(config, t)
        except GenerationExhausted:
            continue
        if isinstance(inst, DenseMatrix):
            nonneg = bool(np.all(inst.data >= 0))
            r = general_bound(inst, tolerances=tol) if nonneg else modulus_bound(inst, tolerances=tol)
            if _gap_zero(r, tol):
                found.append((inst, r.kind, r.gap))
            continue
        for kind in applicable_kinds(inst):
            if wanted is not None and kind not in wanted:
                continue
            r = bound_for(kind, inst, tolerances=tol)
            if _gap_zero(r, tol):
                found.append((inst, kind, r.gap))
    return found


# -- exhaustive verification --------------------------------------------------------

EXHAUSTIVE_KINDS = (MatrixKind.ADJACENCY, MatrixKind.LAPLACIAN, MatrixKind.SIGNLESS_LAPLACIAN)


@dataclass
class ExhaustiveResult:
    """Outcome of checking every labelled connected graph up to ``max_n``.

    ``discrepancies`` maps each check id to the serialized graphs on which
    the two sides of the equivalence disagree. ``equality_cases`` counts
    (graph, kind) pairs with an attained bound, all of which were run
    through the necessary-condition diagnostic.
    """

    graphs_per_n: dict
    discrepancies: dict
    equality_cases: int

    @property
    def ok(self) -> bool:
        return not any(self.discrepancies.values())

    @property
    def total(self) -> int:
        return sum(self.graphs_per_n.values())


EXHAUSTIVE_CHECKS = ("neighbor-sum-regularity", "degree-sum-regularity", "adjacency-equality",
                     "signless-equality", "laplacian-equality", "laplacian-vs-signless",
                     "equality-necessary")


def exhaustive_check(max_n: int = 6, tolerances: Tolerances = DEFAULT_TOLERANCES) -> ExhaustiveResult:
    """Verify the regularity characterisations on all connected graphs with
    ``n <= max_n``. Radii are computed with the batched Jacobi solver, one
    stack per (n, kind)."""
    tol = tolerances
    per_n, equality_cases = {}, 0
    bad = {c: [] for c in EXHAUSTIVE_CHECKS}
    for n in range(1, max_n + 1):
        gs = list(graphs_on(n))
        per_n[n] = len(gs)
        radii = {k: spectral_radii_symmetric(np.stack([build_array(k, g) for g in gs]).astype(float))
                 for k in EXHAUSTIVE_KINDS}
        for i, g in enumerate(gs):
            cls = graphs.classify(g)
            reports = {k: bound_for(k, g, exact=False, tolerances=tol).with_exact(radii[k][i])
                       for k in EXHAUSTIVE_KINDS}
            attained = {k: _gap_zero(r, tol) for k, r in reports.items()}
            mu, q = radii[MatrixKind.LAPLACIAN][i], radii[MatrixKind.SIGNLESS_LAPLACIAN][i]
            eps = tol.gap_tol * _scale(q)
            e = degree_expressions(g)
            verdicts = {
                "neighbor-sum-regularity":
                    (len(set(graphs.neighbor_degree_sums(g))) == 1) == _is_semiregular(g, cls),
                "degree-sum-regularity":
                    (max(e) - min(e) <= DEGREE_EXPR_TOL) == _is_regular(g, cls),
                "adjacency-equality": attained[MatrixKind.ADJACENCY] == _is_semiregular(g, cls),
                "signless-equality": attained[MatrixKind.SIGNLESS_LAPLACIAN] == _is_regular(g, cls),
                "laplacian-equality":
                    attained[MatrixKind.LAPLACIAN] == _is_bipartite_regular(g, cls),
                "laplacian-vs-signless":
                    mu <= q + eps and (abs(mu - q) <= eps) == (graphs.is_bipartite(g) is not None),
                "equality-necessary":
                    not any(equality_diagnostic(r).violation for r in reports.values()),
            }
            equality_cases += sum(attained.values())
            for check, fine in verdicts.items():
                if not fine:
                    bad[check].append(serialize(g))
    return ExhaustiveResult(per_n, bad, equality_cases)
