import json
import subprocess
import sys

import pytest

from rvdkit.cli import main
from rvdkit.graphio import parse_graph6
from rvdkit.rainbow import parse_coloring, verify_coloring


@pytest.fixture
def files(tmp_path):
    (tmp_path / "path5.edges").write_text("0 1\n1 2\n2 3\n3 4\n")
    (tmp_path / "c4.edges").write_text("0 1\n1 2\n2 3\n3 0\n")
    (tmp_path / "c4.colors").write_text("0 1\n1 1\n2 2\n3 2\n")
    (tmp_path / "bad.colors").write_text("0 1\n1 1\n2 1\n3 1\n")
    (tmp_path / "k4.g6").write_text("C~\n")
    return tmp_path


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


def test_rvd_path(files, capsys):
    code, out, err = run(capsys, "rvd", files / "path5.edges")
    assert code == 0 and err == ""
    assert out.splitlines()[0] == "rvd = 1"


def test_rvd_certificates_and_json(files, capsys):
    code, out, _ = run(capsys, "rvd", files / "k4.g6", "--certificates")
    assert code == 0 and "rvd = 4" in out and "certificates:" in out
    code, out, _ = run(capsys, "rvd", files / "c4.edges", "--json", "--certificates")
    data = json.loads(out)
    assert data["rvd"] == 2 and data["coloring"] == [1, 1, 2, 2]
    assert len(data["certificates"]) == 6


def test_rvd_coloring_out_reverifies(files, capsys):
    out_file = files / "w.colors"
    run(capsys, "rvd", files / "k4.g6", "--coloring-out", out_file)
    code, out, _ = run(capsys, "verify", files / "k4.g6", out_file)
    assert (code, out) == (0, "valid\n")


def test_verify(files, capsys):
    assert run(capsys, "verify", files / "c4.edges", files / "c4.colors")[:2] == (0, "valid\n")
    code, out, _ = run(capsys, "verify", files / "c4.edges", files / "bad.colors")
    assert code == 1 and out.startswith("invalid") and "0 1" in out


def test_cut(files, capsys):
    code, out, _ = run(capsys, "cut", files / "c4.edges", files / "c4.colors", 0, 2)
    assert (code, out) == (0, "0 2: cut {1 3}\n")
    code, out, _ = run(capsys, "cut", files / "c4.edges", files / "bad.colors", 0, 2)
    assert (code, out) == (1, "none\n")
    code, out, err = run(capsys, "cut", files / "c4.edges", files / "c4.colors", 0, 9)
    assert code == 2 and out == "" and "not in the graph" in err


def test_family(capsys):
    code, out, _ = run(capsys, "family", "wheel:n=8", "--check")
    lines = out.splitlines()
    assert code == 0 and lines[0] == "rvd = 3" and lines[1] == "verified"
    assert "8 3" in lines  # hub color


def test_family_errors_go_to_stderr(capsys):
    code, out, err = run(capsys, "family", "wheel:n=3")
    assert code == 2 and out == "" and "n >= 4" in err


def test_extremal(files, capsys):
    assert run(capsys, "extremal", "min-size", 6, 3)[1] == "7\n"
    assert run(capsys, "extremal", "max-size", 9, 4)[1] == "10 26\n"
    code, out, _ = run(capsys, "extremal", "gen", "Gk", 6, 3, "--coloring-out", files / "g.colors")
    assert code == 0 and out.startswith("n 6\n") and len(out.splitlines()) == 8
    assert parse_coloring((files / "g.colors").read_text()).palette_size == 3
    code, out, _ = run(capsys, "extremal", "gen", "H", 6, "--format", "graph6")
    assert parse_graph6(out).m == 11
    code, _, err = run(capsys, "extremal", "gen", "Gk", 6)
    assert code == 2 and "usage" in err


def test_enumerate(capsys):
    code, out, _ = run(capsys, "enumerate", 4)
    assert code == 0 and len(out.split()) == 6
    code, out, _ = run(capsys, "enumerate", 3, "--labeled")
    assert len(out.split()) == 4


def test_audit(capsys):
    code, out, _ = run(capsys, "audit", 4, "--theorems", "rvd1,bounds")
    assert code == 0
    assert "PASS    bounds" in out and "PASS    rvd1" in out
    code, out, _ = run(capsys, "audit", 4, "--theorems", "rvd1", "--json")
    data = json.loads(out)
    assert data["passed"] and data["entries"][0]["checked"] == 1 + 2 + 6
    four = {c["rvd"]: c["count"] for c in data["cells"] if c["n"] == 4}
    assert four[1] == 2 and sum(four.values()) == 6
    code, _, err = run(capsys, "audit", 4, "--theorems", "nope")
    assert code == 2 and "unknown" in err


def test_bad_input_exits_2(files, capsys):
    (files / "loop.edges").write_text("0 0\n")
    code, out, err = run(capsys, "rvd", files / "loop.edges")
    assert code == 2 and out == "" and "self-loop" in err
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 2


def test_pipeline_enumerate_rvd_verify(tmp_path):
    cli = [sys.executable, "-m", "rvdkit.cli"]
    stream = subprocess.run(cli + ["enumerate", "5"], capture_output=True, text=True, check=True).stdout
    res = subprocess.run(cli + ["rvd", "-", "--json"], input=stream, capture_output=True, text=True, check=True)
    rows = json.loads(res.stdout)
    assert len(rows) == 21
    for row in rows:
        g = parse_graph6(row["graph6"])
        colors = parse_coloring("".join(f"{v} {c}\n" for v, c in enumerate(row["coloring"])), g.n)
        assert verify_coloring(g, colors).valid and colors.palette_size == row["rvd"]
