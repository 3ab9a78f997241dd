"""Command line: ``sharpbound {report,fuzz,classify,check-matrix}``.

Exit codes: 0 success, 1 fuzz found violations, 2 parse/validation error,
3 solver non-convergence. Errors are written to stderr as a JSON object.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Optional

import numpy as np

from . import __version__, graphs
from .bounds import BoundReport, Tolerances, bound_for, equality_diagnostic, general_bound, modulus_bound
from .errors import NoConvergence, SharpBoundError
from .formats import parse
from .graphs import Digraph, Graph
from .harness import MODELS, PROPERTIES, TrialConfig, run_suite
from .linalg import DenseMatrix, entrywise_abs, row_sum_interval
from .spectra import MatrixKind

EXIT_OK, EXIT_VIOLATIONS, EXIT_INPUT, EXIT_SOLVER = 0, 1, 2, 3

SCHEMA_PATH = Path(__file__).with_name("report_schema.json")


class UsageError(SharpBoundError, ValueError):
    pass


def _num(x: float) -> float:
    """Reals are reported to 9 significant digits."""
    return float(f"{float(x):.9g}")


def bound_block(r: BoundReport) -> dict:
    verdict = equality_diagnostic(r)
    return {
        "exact_radius": _num(r.exact_radius),
        "bound": _num(r.bound),
        "gap": _num(r.gap),
        "argmax": list(r.argmax),
        "all_equal": r.all_equal,
        "equality_holds": verdict.equality_holds,
        "expressions": [_num(v) for v in r.values],
    }


def classification_dict(cls) -> dict:
    if isinstance(cls, graphs.Regular):
        return {"class": "Regular", "r": cls.r}
    if isinstance(cls, graphs.BipartiteSemiRegular):
        return {"class": "BipartiteSemiRegular", "r": cls.r, "s": cls.s,
                "parts": [sorted(p) for p in cls.parts]}
    return {"class": "Other"}


def graph_report(g, tol: Tolerances) -> dict:
    directed = isinstance(g, Digraph)
    connected = graphs.is_strongly_connected(g) if directed else graphs.is_connected(g)
    blocks = {}
    for kind in MatrixKind:
        if kind.is_distance and not connected:
            blocks[kind.value] = {"skipped": "not strongly connected" if directed else "disconnected"}
            continue
        blocks[kind.value] = bound_block(bound_for(kind, g, tolerances=tol))
    out = {"blocks": blocks, "connected": connected}
    if not directed:
        out["classification"] = classification_dict(graphs.classify(g))
    return out


def matrix_report(m: DenseMatrix, tol: Tolerances, require_nonnegative: bool = False) -> dict:
    nonneg = bool(np.all(m.data >= 0))
    if require_nonnegative and not nonneg:
        general_bound(m, exact=False)  # raises NegativeEntry with the location
    r = general_bound(m, tolerances=tol) if nonneg else modulus_bound(m, tolerances=tol)
    lo, hi = row_sum_interval(m if nonneg else entrywise_abs(m))
    return {
        "blocks": {r.kind: bound_block(r)},
        "irreducible": r.irreducible,
        "nonnegative": nonneg,
        "row_sum_interval": [_num(lo), _num(hi)],
        "row_sums_of": "matrix" if nonneg else "absolute values",
    }


def build_report(text: str, path: str, tol: Tolerances, require_nonnegative: bool = False,
                 matrix_only: bool = False) -> dict:
    inst = parse(text)
    is_matrix = isinstance(inst, DenseMatrix)
    if matrix_only and not is_matrix:
        raise UsageError("check-matrix expects a Matrix Market file")
    if is_matrix:
        body = matrix_report(inst, tol, require_nonnegative)
        kind, size = "matrix", int(np.count_nonzero(inst.data))
    else:
        body = graph_report(inst, tol)
        kind, size = ("digraph" if isinstance(inst, Digraph) else "graph"), inst.m
    return {
        **body,
        "input": {"path": path, "format": "matrix-market" if is_matrix else "edge-list",
                  "kind": kind, "n": inst.n, "m": size},
        "tolerances": {"gap": tol.gap_tol, "eq": tol.eq_tol},
        "tool": {"name": "sharpbound", "version": __version__},
    }


# -- rendering ----------------------------------------------------------------------

def render_text(obj, indent: int = 0) -> str:
    """Key-sorted indented ``key: value`` text."""
    pad = "  " * indent
    lines = []
    for key in sorted(obj):
        val = obj[key]
        if isinstance(val, dict):
            lines.append(f"{pad}{key}:")
            lines.append(render_text(val, indent + 1))
        else:
            lines.append(f"{pad}{key}: {json.dumps(val, sort_keys=True)}")
    return "\n".join(x for x in lines if x)


def emit(obj: dict, as_json: bool, out=None) -> None:
    out = out or sys.stdout
    out.write(json.dumps(obj, sort_keys=True, indent=2) if as_json else render_text(obj))
    out.write("\n")


def emit_error(exc: BaseException, err=None) -> None:
    err = err or sys.stderr
    payload = {"type": type(exc).__name__, "message": str(exc)}
    line = getattr(exc, "line", None)
    if line is not None:
        payload["line"] = line
    err.write(json.dumps({"error": payload}, sort_keys=True) + "\n")


# -- argument parsing ------------------------------------------------------------------

def _parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--tolerance-gap", type=float, default=1e-8,
                        help="relative tolerance for bound attainment (default 1e-8)")
    common.add_argument("--tolerance-eq", type=float, default=1e-9,
                        help="relative tolerance for equal expressions (default 1e-9)")
    common.add_argument("--json", action="store_true", help="emit JSON instead of text")

    p = argparse.ArgumentParser(prog="sharpbound", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True)

    rep = sub.add_parser("report", parents=[common], help="bounds and radii for one input file")
    rep.add_argument("path")
    rep.add_argument("--require-nonnegative", action="store_true",
                     help="reject matrices with negative entries instead of using |A|")

    chk = sub.add_parser("check-matrix", parents=[common], help="bound report for a matrix file")
    chk.add_argument("path")
    chk.add_argument("--require-nonnegative", action="store_true")

    cls = sub.add_parser("classify", parents=[common], help="regular / semi-regular / other")
    cls.add_argument("path")

    fz = sub.add_parser("fuzz", parents=[common], help="run the property suite")
    fz.add_argument("--model", choices=MODELS, default="gnp")
    fz.add_argument("--trials", type=int, default=100)
    fz.add_argument("--seed", type=int, default=0)
    fz.add_argument("--min-n", type=int, default=1)
    fz.add_argument("--max-n", type=int, default=12)
    fz.add_argument("--density", type=float, default=0.5)
    fz.add_argument("--degree", type=int, default=3)
    fz.add_argument("--property", action="append", dest="properties", metavar="ID",
                    choices=sorted(PROPERTIES), help="restrict to this property (repeatable)")
    fz.add_argument("--no-shrink", action="store_true")
    return p


def _read(path: str) -> str:
    return Path(path).read_text()


def main(argv: Optional[list] = None) -> int:
    args = _parser().parse_args(argv)
    tol = Tolerances(gap_tol=args.tolerance_gap, eq_tol=args.tolerance_eq)
    try:
        if args.command in ("report", "check-matrix"):
            report = build_report(_read(args.path), args.path, tol, args.require_nonnegative,
                                  matrix_only=args.command == "check-matrix")
            emit(report, args.json)
            return EXIT_OK
        if args.command == "classify":
            g = parse(_read(args.path))
            if not isinstance(g, Graph):
                raise UsageError("classify expects an undirected graph")
            emit(classification_dict(graphs.classify(g)), args.json)
            return EXIT_OK
        config = TrialConfig(model=args.model, size_range=(args.min_n, args.max_n),
                             density=args.density, degree=args.degree, trials=args.trials,
                             seed=args.seed, tolerances=tol)
        result = run_suite(config, args.properties, shrink_violations=not args.no_shrink)
        sys.stdout.write(result.to_json() + "\n")
        return EXIT_OK if result.ok else EXIT_VIOLATIONS
    except NoConvergence as exc:
        emit_error(exc)
        return EXIT_SOLVER
    except (SharpBoundError, OSError, ValueError) as exc:
        emit_error(exc)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
