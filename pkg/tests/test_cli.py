import json
import subprocess
import sys
from importlib import resources

import jsonschema
import pytest

from branchcheck.cli import main

SCHEMA = json.loads(resources.files("branchcheck").joinpath("report.schema.json").read_text())


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_local_irreducible(capsys):
    code, out, _ = run(capsys, "local", "(y^2-x^3)^2-x^5*y")
    assert code == 0
    assert out.strip().splitlines()[-1] == "irreducible; semigroup <4,6,13>"


def test_infinity_json(capsys):
    code, out, _ = run(capsys, "infinity", "x+(x+y^3)^3", "--json")
    assert code == 0
    data = json.loads(out)
    assert data["verdict"] == "reducible"
    assert data["diagram"] == [[12, 2], [48, 6]]
    assert data["polygon_at_infinity"] == [[0, 8], [6, 6], [12, 0]]
    assert data["transformed_polygon"] == [[0, 8], [12, 6], [60, 0]]


def test_merle_subcommand(capsys):
    code, out, _ = run(capsys, "merle", "6,1;14,2")
    assert code == 0
    assert out.strip().splitlines()[-1] == "not Merle: condition (iii) fails at i=2 (gcd=2, expected 1)"
    code, out, _ = run(capsys, "merle", "6,1;13,2")
    assert out.strip().splitlines()[-1] == "Merle type diagram M(4,6,13)"


def test_smooth(capsys):
    code, out, _ = run(capsys, "local", "y^2 - x")
    assert code == 0
    assert out.strip() == "smooth at origin (trivially irreducible)"


def test_exit_statuses(capsys):
    assert run(capsys, "local", "(y^2-x^3)^2")[0] == 2
    assert run(capsys, "infinity", "y^2-x^3")[0] == 2
    assert run(capsys, "am", "y")[0] == 2
    code, _, err = run(capsys, "local", "y^-2")
    assert code == 1 and "parse error" in err
    assert run(capsys, "merle", "6,0")[0] == 1


def test_trace_output(capsys):
    code, out, _ = run(capsys, "local", "(y^2-x^3)^2-x^5*y", "--trace")
    assert "discriminant: -27*u^20 - 256*u^19 + 288*u^13*v + 256*u^6*v^2 - 256*v^3" in out
    assert "H_i" in out and "C_i" in out


def test_at_point_and_am(capsys):
    code, out, _ = run(capsys, "at-point", "(y-1)^2-x^5", "--y0", "1")
    assert code == 0 and out.strip().endswith("irreducible at (0,1); semigroup <2,5>")
    code, out, _ = run(capsys, "am", "x+(x+y^3)^3", "--json")
    data = json.loads(out)
    assert (data["q"], data["n"], data["holds"]) == (8, 9, True)


def test_diagram_subcommand(capsys):
    code, out, _ = run(capsys, "diagram", "x^8+(x^2+y^3)^3", "--json")
    assert code == 0
    assert json.loads(out)["diagram"] == [[12, 2], [48, 6]]


CASES = [
    ("local", "(y^2-x^3)^2-x^5*y"),
    ("local", "(y^2-x^3)^2-x^7"),
    ("local", "y^2-x"),
    ("local", "(y^2-x^3)^2"),
    ("local", "y^2-x^3+1"),
    ("at-point", "(y-1)^2-x^5"),
    ("at-point", "y*(y-1)-x^3"),
    ("infinity", "x+(x+y^3)^3"),
    ("infinity", "y^2-x"),
    ("infinity", "x*y"),
    ("diagram", "y^2-x^5"),
    ("diagram", "x*y^2-1"),
    ("merle", "6,1;13,2"),
    ("merle", "inf,1"),
    ("merle", "5,2"),
    ("am", "x+(x+y^3)^3"),
    ("am", "y"),
]


@pytest.mark.parametrize("cmd, arg", CASES)
@pytest.mark.parametrize("trace", [False, True])
def test_json_validates_and_is_stable(capsys, cmd, arg, trace):
    argv = [cmd, arg, "--json"] + (["--trace"] if trace else [])
    _, first, _ = run(capsys, *argv)
    _, second, _ = run(capsys, *argv)
    assert first == second
    jsonschema.validate(json.loads(first), SCHEMA)


def test_console_entry_point():
    proc = subprocess.run([sys.executable, "-m", "branchcheck", "local", "y^3-x^4"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert proc.stdout.strip().endswith("irreducible; semigroup <3,4>")
