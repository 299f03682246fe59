import json
import subprocess
import sys

import pytest

from rigcrystal.cli import main
from rigcrystal.explorer import generate, parse_json

from conftest import matrix


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_gen_dot_binfinity_top(capsys):
    code, out, _ = run(capsys, "gen", "--cartan", "A2", "--hw", "inf", "--depth", "3", "--format", "dot")
    assert code == 0
    assert out.startswith("digraph crystal {")
    assert out.count("->") == 14 and out.count("[label=") == 27


def test_gen_json_round_trips(capsys):
    code, out, _ = run(capsys, "gen", "--cartan", "G2", "--hw", "1,0", "--format", "json")
    assert code == 0
    g = parse_json(out)
    assert g.complete and len(g.nodes) == 7
    assert g == generate(matrix("G2"), g.highest_weight)


def test_gen_text(capsys):
    code, out, _ = run(capsys, "gen", "--cartan", "[[2,-1],[-1,2]]", "--hw", "1,0")
    assert code == 0
    assert out.splitlines()[0] == "nodes: 3  edges: 2  complete: true"


def test_gen_output_file(capsys, tmp_path):
    path = tmp_path / "g.dot"
    code, out, _ = run(capsys, "gen", "--cartan", "A2", "--hw", "0,0", "--format", "dot", "-o", str(path))
    assert code == 0 and out == ""
    assert path.read_text().count("[label=") == 1


def test_fold_report(capsys):
    code, out, _ = run(capsys, "fold", "--cartan", "[[2,-6],[-4,2]]")
    assert code == 0
    doc = json.loads(out)
    assert doc["N"] == 2 and len(doc["vertices"]) == 10 and len(doc["edges"]) == 24
    assert doc["report"]["passed"]
    assert ["1", "2", 2] in doc["c"]
    code, text, _ = run(capsys, "fold", "--cartan", "[[2,-6],[-4,2]]", "--format", "text")
    assert "vertices: 10  edges: 24" in text and "FAIL" not in text
    code, dot, _ = run(capsys, "fold", "--cartan", "C2", "--format", "dot")
    assert dot.count(" -- ") == 2


@pytest.mark.parametrize("cartan", ["C2", "G2", "[[2,-1],[-3,2]]", "[[2,-6],[-4,2]]"])
def test_virtcheck_passes(capsys, cartan):
    code, out, _ = run(capsys, "virtcheck", "--cartan", cartan, "--depth", "4")
    assert code == 0
    assert out.strip().endswith(": 0 violations")


def test_virtcheck_json(capsys):
    code, out, _ = run(capsys, "virtcheck", "--cartan", "G2", "--hw", "1,1", "--depth", "3", "--format", "json")
    assert code == 0 and json.loads(out)["violations"] == []


def test_decompose(capsys):
    code, out, _ = run(capsys, "decompose", "--cartan", "A2", "--mu", "1,0", "--lambda", "1,1")
    assert code == 0
    rows = out.strip().splitlines()
    assert len(rows) == 4
    assert [r.split()[0] + r.split()[1] for r in rows[1:]] == ["(2,1)", "(0,2)", "(1,0)"]
    code, out, _ = run(capsys, "decompose", "--cartan", "A2", "--mu", "1,0", "--lambda", "1,1", "--format", "json")
    doc = json.loads(out)
    assert [c["weight"] for c in doc["components"]] == [[2, 1], [0, 2], [1, 0]]
    assert doc["partial"] is False


def test_decompose_affine_partial(capsys):
    code, out, _ = run(capsys, "decompose", "--cartan", "A1~", "--mu", "1,0", "--lambda", "1,1",
                       "--depth", "3", "--format", "json")
    assert code == 0 and json.loads(out)["partial"] is True


def test_validate(capsys):
    code, out, _ = run(capsys, "validate", "--cartan", "[[2,-6],[-4,2]]")
    assert code == 0 and "symmetrizer: [2, 3]" in out


@pytest.mark.parametrize("argv", [
    ["gen", "--cartan", "A2", "--hw", "1"],
    ["gen", "--cartan", "A2", "--hw", "1,x"],
    ["gen", "--cartan", "A2", "--hw", "-1,0"],
    ["gen", "--cartan", "A2", "--hw", "inf"],
    ["decompose", "--cartan", "A2", "--mu", "inf", "--lambda", "1,0"],
    ["frobnicate"],
])
def test_usage_errors_exit_2(capsys, argv):
    with pytest.raises(SystemExit) as exc:
        main(argv)
    assert exc.value.code == 2


@pytest.mark.parametrize("argv", [
    ["validate", "--cartan", "[[2,1],[1,2]]"],
    ["validate", "--cartan", "[[2,-1,-1],[-1,2,-1],[-2,-1,2]]"],
    ["validate", "--cartan", "/nonexistent/matrix.json"],
    ["validate", "--cartan", "Q7"],
    ["decompose", "--cartan", "A1~", "--mu", "1,0", "--lambda", "0,0", "--max-nodes", "100"],
])
def test_domain_errors_exit_1(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 1 and out == "" and err.startswith("error:")


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "rigcrystal", "validate", "--cartan", "G2"],
                          capture_output=True, text=True, check=True)
    assert "symmetrizer: [1, 3]" in proc.stdout
