import json
import subprocess
import sys

import pytest

from isgraph.cli import CliConfig, main
from isgraph.errors import ParseError


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_classify_c12(capsys):
    code, out, _ = run(capsys, "classify", "C12", "--classes", "cograph,cluster", "--format", "json")
    assert code == 0
    data = json.loads(out)
    got = {c["class"]: c for c in data["classes"]}
    assert got["cograph"]["verdict"] is True
    assert got["cluster"]["verdict"] is False and len(got["cluster"]["witness"]) == 3


def test_graph_formats(capsys):
    code, out, _ = run(capsys, "graph", "S3", "--format", "dot")
    assert code == 0 and out.startswith("graph iggraf {") and out.count("--") == 6
    code, out, _ = run(capsys, "graph", "S3", "--format", "json")
    assert len(json.loads(out)["edges"]) == 6
    code, out, _ = run(capsys, "graph", "Q8")
    assert out.startswith("vertices 0")


def test_lattice(capsys):
    code, out, _ = run(capsys, "lattice", "S4")
    assert code == 0 and "30 subgroups" in out
    code, out, _ = run(capsys, "lattice", "Heis3", "--format", "json")
    data = json.loads(out)
    assert data["profile"]["sylow_summary"] == {"3": "2gen_exponent_p"}


def test_suzuki_and_catalan(capsys):
    code, out, _ = run(capsys, "suzuki-check", "32", "--format", "json")
    data = json.loads(out)
    assert data["values"] == [31, 25, 41] and data["condition"]
    code, out, _ = run(capsys, "suzuki-check", "8")
    assert "flag" in out
    code, out, _ = run(capsys, "catalan", "1000000")
    assert out == "3^2 - 2^3 = 1\n"


def test_zgraph(capsys):
    code, out, _ = run(capsys, "zgraph", "12", "--classes", "cograph,chordal")
    assert code == 0
    assert "cograph        false" in out and "chordal        false" in out


def test_verify_exit_code(capsys):
    code, out, _ = run(capsys, "verify", "--max-order", "12", "--jobs", "1")
    # firm discrepancies make the exit status 4 (see the ledger for why they exist)
    assert code in (0, 4)
    assert out.startswith("groups")


def test_out_file(tmp_path, capsys):
    path = tmp_path / "g.dot"
    code, out, _ = run(capsys, "graph", "C12", "--format", "dot", "--out", str(path))
    assert code == 0 and out == ""
    assert path.read_text().startswith("graph iggraf {")


@pytest.mark.parametrize("argv, code, name", [
    (["graph", "Q12"], 1, "InvalidSpec"),
    (["graph", "C4xZ2"], 3, "ParseError"),
    (["graph", "S7"], 2, "OrderCapExceeded"),
    (["classify", "C12", "--classes", "planar"], 3, "ParseError"),
    (["suzuki-check", "16"], 1, "NotOddPowerOfTwo"),
    (["catalan", "-1"], 1, "OutOfRange"),
    (["classify", "S5", "--perfect-cap", "10"], 2, "VertexCapExceeded"),
    (["lattice", "S5", "--subgroup-cap", "5"], 2, "SubgroupCountCapExceeded"),
    (["bogus"], 3, "ParseError"),
    (["graph", "C4", "--order-cap", "0"], 3, "ParseError"),
])
def test_error_paths(capsys, argv, code, name):
    got, out, err = run(capsys, *argv)
    assert got == code
    lines = err.strip().splitlines()
    assert len(lines) == 1 and lines[0].startswith(f"error[{name}]:")


def test_config_validation():
    with pytest.raises(ParseError):
        CliConfig(jobs=0)
    assert CliConfig().perfect_vertex_cap == 80


def test_output_independent_of_jobs():
    base = [sys.executable, "-m", "isgraph", "verify", "--max-order", "30", "--format", "json"]
    a = subprocess.run(base + ["--jobs", "1"], capture_output=True)
    b = subprocess.run(base + ["--jobs", "3"], capture_output=True)
    assert a.returncode == b.returncode
    assert a.stdout == b.stdout and a.stdout
