import io as _io
import json
import subprocess
import sys
from contextlib import redirect_stderr, redirect_stdout

import pytest

from twinwidth import cli, io
from twinwidth.families import complete, cycle, hypercube, paley
from twinwidth.graph import sequence_width


def run(argv, stdin=None, monkeypatch=None):
    out, err = _io.StringIO(), _io.StringIO()
    if stdin is not None:
        monkeypatch.setattr(sys, "stdin", _io.StringIO(stdin))
    with redirect_stdout(out), redirect_stderr(err):
        code = cli.run(argv)
    return code, out.getvalue(), err.getvalue()


@pytest.fixture
def files(tmp_path):
    paths = {}
    for name, g in [("k3", complete(3)), ("c4", cycle(4)), ("q3", hypercube(3)),
                    ("k5", complete(5)), ("k6", complete(6)), ("p5", paley(5))]:
        p = tmp_path / f"{name}.el"
        p.write_text(io.write_edge_list(g))
        paths[name] = str(p)
    paths["dir"] = tmp_path
    return paths


def test_family(files):
    out = files["dir"] / "q3.el"
    code, _, _ = run(["family", "hamming", "--d", "3", "--k", "2", "-o", str(out)])
    assert code == 0 and io.load_graph(out) == hypercube(3)
    code, text, _ = run(["family", "paley", "--q", "13"])
    assert code == 0 and io.read_edge_list(text) == paley(13)


def test_family_missing_parameter(files):
    code, _, err = run(["family", "hamming", "--d", "3"])
    assert code == 2 and "--k" in err


def test_family_seed_from_environment(monkeypatch):
    argv = ["family", "random_regular", "--n", "10", "--d", "3"]
    monkeypatch.delenv("TWW_SEED", raising=False)
    base = run(argv)[1]
    monkeypatch.setenv("TWW_SEED", "0")
    assert run(argv)[1] == base
    monkeypatch.setenv("TWW_SEED", "99")
    assert run(argv)[1] != base
    assert run(argv + ["--seed", "0"])[1] == base


def test_product_pipeline_into_bounds(files, monkeypatch):
    code, text, _ = run(["product", "--kind", "cartesian", files["k3"], files["k3"]])
    assert code == 0
    code, report, _ = run(["bounds", "-"], stdin=text, monkeypatch=monkeypatch)
    assert code == 0 and json.loads(report)["lower_symdiff"] == 4


def test_product_kinds(files):
    d = files["dir"]
    for kind, extra in [("tensor", []), ("strong", []), ("lexicographic", []), ("modular", []),
                        ("corona", []), ("l_corona", ["--ell", "2"]), ("rooted", ["--root", "1"])]:
        code, text, _ = run(["product", "--kind", kind, files["k3"], files["c4"], *extra])
        assert code == 0 and io.read_edge_list(text).n > 0
    rot = d / "rot.txt"
    code, text, _ = run(["product", "--kind", "replacement", files["k6"], files["p5"],
                         "--rotation-out", str(rot)])
    assert code == 0 and io.read_edge_list(text).n == 30
    assert len(io.read_rotation_lines(rot.read_text())) == 30 * 3
    code, _, _ = run(["product", "--kind", "zigzag", files["k5"], files["c4"]])
    assert code == 0


def test_product_regularity_error(files):
    code, _, err = run(["product", "--kind", "replacement", files["k3"], files["c4"]])
    assert code == 2 and "Error" in err


def test_sequence_command(files):
    d = files["dir"]
    seq, graph = d / "s.txt", d / "g.el"
    code, out, _ = run(["sequence", "--product", "strong", files["c4"], files["c4"],
                        "-o", str(seq), "--graph-out", str(graph)])
    rec = json.loads(out)
    assert code == 0 and rec == {"claimed_bound": 4, "verified_width": 4, "holds": True}
    assert sequence_width(io.load_graph(graph), io.load_sequence(seq)) == 4
    for kind, extra in [("cartesian", []), ("tensor", []), ("lexicographic", []),
                        ("corona", []), ("l_corona", ["--ell", "2"]), ("rooted", ["--root", "0"])]:
        code, out, _ = run(["sequence", "--product", kind, files["k3"], files["c4"], *extra])
        assert code == 0 and json.loads(out)["holds"]
    code, out, _ = run(["sequence", "--product", "replacement", files["k6"], files["p5"]])
    assert code == 0 and json.loads(out)["claimed_bound"] == 5
    code, out, _ = run(["sequence", "--product", "zigzag", files["k5"], files["c4"]])
    assert code == 0 and json.loads(out)["claimed_bound"] == 12
    code, out, _ = run(["sequence", "--product", "tensor_star", files["c4"], "--star-n", "3"])
    assert code == 0 and json.loads(out)["holds"]


def test_sequence_with_explicit_factor_sequences(files):
    d = files["dir"]
    sg = d / "sg.txt"
    sg.write_text("0 1\n0 2\n")
    code, out, _ = run(["sequence", "--product", "cartesian", files["k3"], files["k3"],
                        "--seq-g", str(sg), "--seq-h", str(sg)])
    assert code == 0 and json.loads(out)["verified_width"] == 4
    sg.write_text("0 1\n")
    code, _, err = run(["sequence", "--product", "cartesian", files["k3"], files["k3"],
                        "--seq-g", str(sg)])
    assert code == 2 and "InvalidSequenceError" in err


def test_exact_and_verify(files):
    wit = files["dir"] / "w.txt"
    code, out, _ = run(["exact", files["q3"], "--witness", str(wit), "--no-timestamps"])
    rec = json.loads(out)
    assert code == 0 and rec["status"] == "exact" and rec["value"] == 2 and "elapsed" not in rec
    code, out, _ = run(["verify", files["q3"], str(wit)])
    assert code == 0 and json.loads(out)["sequence_width"] == 2
    code, out, _ = run(["exact", files["q3"], "--le", "1", "--time", "60s", "--no-memo"])
    assert code == 0 and json.loads(out)["answer"] == "no"
    code, out, _ = run(["exact", files["q3"], "--nodes", "1", "--no-twins", "--no-symmetry",
                        "--no-memo"])
    assert code == 0 and json.loads(out)["status"] in ("timeout", "lower-only", "exact")


def test_verify_errors(files):
    bad = files["dir"] / "bad.txt"
    bad.write_text("0 1\n0 1\n")
    code, _, err = run(["verify", files["q3"], str(bad)])
    assert code == 2 and "InvalidSequenceError" in err
    bad.write_text("0 1\ngarbage\n")
    assert run(["verify", files["q3"], str(bad)])[0] == 2
    bad.write_text("0 1\n")
    assert run(["verify", files["q3"], str(bad)])[0] == 2
    assert run(["verify", files["q3"], str(bad), "--partial"])[0] == 0


def test_io_errors(files):
    missing = str(files["dir"] / "nope.el")
    assert run(["verify", missing, missing])[0] == 3
    assert run(["family", "complete", "--n", "3", "-o", str(files["dir"] / "no" / "x.el")])[0] == 3


def test_usage_errors():
    assert run(["frobnicate"])[0] == 2
    assert run(["exact"])[0] == 2
    assert run(["exact", "g.el", "--time", "soon"])[0] == 2
    assert run(["reproduce", "--tier", "nightly"])[0] == 2


def test_parse_duration():
    assert cli.parse_duration("60s") == 60
    assert cli.parse_duration("2m") == 120
    assert cli.parse_duration("1.5h") == 5400
    assert cli.parse_duration("250ms") == 0.25
    assert cli.parse_duration("7") == 7


def test_reproduce_quick_is_deterministic(files):
    out = files["dir"] / "r.json"
    code1, text1, _ = run(["reproduce", "--tier", "quick", "--no-timestamps"])
    code2, _, _ = run(["reproduce", "--tier", "quick", "--no-timestamps", "--jobs", "2",
                       "-o", str(out)])
    assert code1 == code2 == 0
    assert out.read_text() == text1
    report = json.loads(text1)
    assert report["pass"] and report["failed"] == 0
    assert all(set(r) == {"name", "reference", "relation", "expected", "computed", "status"}
               for r in report["fixtures"])
    timed = json.loads(run(["reproduce", "--tier", "quick"])[1])
    assert all("runtime" in r for r in timed["fixtures"])


def test_console_script_entry_point(files):
    proc = subprocess.run([sys.executable, "-m", "twinwidth.cli", "verify", files["q3"],
                           str(files["dir"] / "missing.txt")], capture_output=True, text=True)
    assert proc.returncode == 3
