import json
import math
from pathlib import Path

import jsonschema
import pytest

from sharpbound import graphs
from sharpbound.cli import (EXIT_INPUT, EXIT_OK, EXIT_SOLVER, EXIT_VIOLATIONS, SCHEMA_PATH,
                            main)
from sharpbound.formats import serialize, serialize_matrix
from sharpbound.graphs import Graph
from sharpbound.linalg import DenseMatrix

DATA = Path(__file__).with_name("data")
SCHEMA = json.loads(SCHEMA_PATH.read_text())


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


def write(tmp_path, name, text):
    p = tmp_path / name
    p.write_text(text)
    return p


def report(capsys, path, *flags):
    code, out, err = run(capsys, "report", path, "--json", *flags)
    assert code == EXIT_OK, err
    data = json.loads(out)
    jsonschema.validate(data, SCHEMA)
    return data


def test_p3_report(capsys):
    r = report(capsys, DATA / "p3.txt")
    adj = r["blocks"]["adjacency"]
    assert adj["exact_radius"] == pytest.approx(math.sqrt(2), abs=1e-8)
    assert adj["bound"] == pytest.approx(math.sqrt(2), abs=1e-8)
    assert adj["gap"] <= 1e-9 and adj["equality_holds"]
    assert r["classification"] == {"class": "BipartiteSemiRegular", "r": 2, "s": 1,
                                   "parts": [[1], [0, 2]]}
    assert r["input"] == {"path": str(DATA / "p3.txt"), "format": "edge-list",
                          "kind": "graph", "n": 3, "m": 2}


def test_p3_text_golden(capsys):
    code, out, _ = run(capsys, "report", DATA / "p3.txt")
    golden = (DATA / "p3_report.txt").read_text().replace("@PATH@", str(DATA / "p3.txt"))
    assert code == EXIT_OK and out == golden


def test_k4_report(capsys, tmp_path):
    r = report(capsys, write(tmp_path, "k4.txt", serialize(graphs.complete(4))))
    q, lap = r["blocks"]["signless-laplacian"], r["blocks"]["laplacian"]
    assert q["exact_radius"] == pytest.approx(6) and q["bound"] == pytest.approx(6)
    assert abs(q["gap"]) <= 1e-9
    assert lap["exact_radius"] == pytest.approx(4) and lap["bound"] == pytest.approx(6)


def test_disconnected_report(capsys, tmp_path):
    r = report(capsys, write(tmp_path, "g.txt", "graph 3 1\n0 1\n"))
    assert not r["connected"]
    for kind in ("distance", "distance-laplacian", "distance-signless-laplacian"):
        assert r["blocks"][kind] == {"skipped": "disconnected"}
    assert "exact_radius" in r["blocks"]["adjacency"]


def test_digraph_report(capsys, tmp_path):
    r = report(capsys, write(tmp_path, "d.txt", "digraph 3 3\n0 1\n1 2\n2 0\n"))
    assert "classification" not in r
    assert r["blocks"]["laplacian"]["exact_radius"] == pytest.approx(math.sqrt(3))
    r = report(capsys, write(tmp_path, "d2.txt", "digraph 2 1\n0 1\n"))
    assert r["blocks"]["distance"] == {"skipped": "not strongly connected"}


def test_check_matrix(capsys):
    code, out, _ = run(capsys, "check-matrix", DATA / "m2.mtx", "--json")
    r = json.loads(out)
    jsonschema.validate(r, SCHEMA)
    blk = r["blocks"]["general"]
    assert code == EXIT_OK
    assert blk["bound"] == 6.0
    assert blk["exact_radius"] == pytest.approx(5.372281, abs=1e-6)
    assert r["row_sum_interval"] == [3.0, 7.0]
    assert r["irreducible"] and r["nonnegative"]


def test_signed_matrix_routes_to_modulus(capsys, tmp_path):
    p = write(tmp_path, "s.mtx", serialize_matrix(DenseMatrix([[1.0, -2.0], [-3.0, 4.0]])))
    r = report(capsys, p)
    assert r["blocks"]["modulus"]["bound"] == 6.0
    assert r["row_sums_of"] == "absolute values"
    code, _, err = run(capsys, "report", p, "--require-nonnegative")
    assert code == EXIT_INPUT
    assert json.loads(err)["error"]["type"] == "NegativeEntry"


def test_check_matrix_rejects_graph(capsys):
    code, _, err = run(capsys, "check-matrix", DATA / "p3.txt")
    assert code == EXIT_INPUT and "error" in json.loads(err)


@pytest.mark.parametrize("text, line", [
    ("graph 2 1\n0 0\n", 2),
    ("graph 3 2\n0 1\n0 9\n", 3),
    ("hello\n", 1),
])
def test_parse_errors(capsys, tmp_path, text, line):
    code, out, err = run(capsys, "report", write(tmp_path, "bad.txt", text))
    assert code == EXIT_INPUT and out == ""
    assert json.loads(err)["error"]["line"] == line


def test_non_square(capsys, tmp_path):
    p = write(tmp_path, "ns.mtx", "%%MatrixMarket matrix coordinate real general\n2 3 0\n")
    code, _, err = run(capsys, "report", p)
    assert code == EXIT_INPUT and json.loads(err)["error"]["type"] == "NonSquare"


def test_missing_file(capsys, tmp_path):
    code, _, err = run(capsys, "report", tmp_path / "none.txt")
    assert code == EXIT_INPUT and json.loads(err)["error"]["type"] == "FileNotFoundError"


def test_solver_failure_exit_code(capsys, monkeypatch):
    from sharpbound import bounds
    from sharpbound.errors import NoConvergence

    def boom(*a, **k):
        raise NoConvergence("stalled")
    monkeypatch.setattr(bounds, "spectral_radius_general", boom)
    code, _, err = run(capsys, "check-matrix", DATA / "m2.mtx")
    assert code == EXIT_SOLVER and json.loads(err)["error"]["type"] == "NoConvergence"


def test_classify(capsys, tmp_path):
    code, out, _ = run(capsys, "classify", write(tmp_path, "c6.txt", serialize(graphs.cycle(6))),
                       "--json")
    assert code == EXIT_OK and json.loads(out) == {"class": "Regular", "r": 2}
    code, out, _ = run(capsys, "classify", write(tmp_path, "p4.txt", serialize(graphs.path(4))))
    assert out.strip() == 'class: "Other"'


def test_fuzz_clean(capsys):
    code, out, _ = run(capsys, "fuzz", "--model", "gnp", "--trials", 100, "--seed", 7)
    r = json.loads(out)
    assert code == EXIT_OK and r["ok"] and r["violations"] == []


def test_fuzz_deterministic(capsys):
    args = ("fuzz", "--model", "signed-matrix", "--trials", 30, "--seed", 99, "--max-n", 9)
    first = run(capsys, *args)
    assert first == run(capsys, *args)


def test_fuzz_violation_exit_code(capsys):
    # a tolerance negative enough that every attained bound looks violated
    code, out, _ = run(capsys, "fuzz", "--model", "random-regular", "--trials", 3,
                       "--property", "general-bound", "--property", "graph-bounds",
                       "--tolerance-gap", "-0.5", "--no-shrink")
    r = json.loads(out)
    assert code == EXIT_VIOLATIONS and not r["ok"]
    assert r["violations"][0]["property"] == "graph-bounds"


def test_report_stable(capsys):
    a = run(capsys, "report", DATA / "p3.txt")
    b = run(capsys, "report", DATA / "p3.txt")
    assert a == b


def test_round_trip_through_cli(capsys, tmp_path):
    g = Graph(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 2)])
    r = report(capsys, write(tmp_path, "g.txt", serialize(g)))
    assert r["input"]["m"] == 6
