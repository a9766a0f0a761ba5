from __future__ import annotations

import json
import subprocess
import sys

import pytest

from ribbonhl.cli import main
from ribbonhl.golden import COSPIN_87651, EXAMPLE_TUPLE, EXAMPLE_TUPLE_WEIGHT
from ribbonhl.qpoly import Polynomial
from ribbonhl.rigged import cocharge, fermionic_polynomial, rc_from_json, theta
from ribbonhl.ribbons import RibbonTableau, enumerate_ribbon_tableaux, stanton_white
from ribbonhl.symfunc import hl_expansion, parse_symfunction
from ribbonhl.tuples import TupleTableau, inversions


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_cospin(capsys):
    code, out, _ = run(capsys, "cospin", "--shape", "8,7,6,5,1", "--weight", "3,3,2,1", "--k", "3")
    assert code == 0
    assert out.strip() == COSPIN_87651.to_text()
    code, out, _ = run(capsys, "cospin", "--shape", "8,7,6,5,1", "--weight", "3,3,2,1", "--k", "3", "--json")
    assert Polynomial.from_json(json.loads(out)) == COSPIN_87651


def test_inv_poly(capsys):
    code, out, _ = run(capsys, "inv-poly", "--shape-tuple", "[[2],[3,2],[2]]", "--weight", "3,3,2,1")
    assert code == 0 and out.strip() == COSPIN_87651.to_text()


@pytest.mark.parametrize("basis", ["m", "s", "p"])
def test_hl_matches_library(capsys, basis):
    code, out, _ = run(capsys, "hl", "--lambda", "2,1,1", "--basis", basis, "--json")
    assert code == 0
    assert parse_symfunction(out) == hl_expansion((2, 1, 1), basis)


def test_hl_text_and_root(capsys):
    _, out, _ = run(capsys, "hl", "--lambda", "2,1", "--basis", "s")
    assert out.splitlines() == ["s[3]    1", "s[2,1]  q"]
    _, out, _ = run(capsys, "hl", "--lambda", "2,2", "--at-root", "2")
    assert out.splitlines() == ["m[4]    1", "m[2,2]  1"]
    _, out, _ = run(capsys, "hl", "--lambda", "2,1,1", "--untilde")
    assert "m[4]" in out and "q^3" in out.splitlines()[0]
    code, _, _ = run(capsys, "hl", "--lambda", "2,1", "--route", "fermionic")
    assert code == 0


def test_theta(capsys):
    code, out, _ = run(capsys, "theta", "--tuple", json.dumps(EXAMPLE_TUPLE), "--json")
    assert code == 0
    data = json.loads(out)
    t = TupleTableau.from_rows(EXAMPLE_TUPLE, EXAMPLE_TUPLE_WEIGHT)
    assert rc_from_json(data) == theta(t)
    assert data["cocharge"] == cocharge(theta(t)) == data["inversions"] == inversions(t)
    _, out, _ = run(capsys, "theta", "--tuple", json.dumps(EXAMPLE_TUPLE))
    assert out.splitlines()[-1] == "cocharge 2  inversions 2"


def test_psi_directions(capsys):
    t = enumerate_ribbon_tableaux((3, 3), (1, 1), 3)[0]
    code, out, _ = run(capsys, "psi", "--tableau", json.dumps(t.to_json()), "--json")
    assert code == 0
    image = json.loads(out)
    assert image == stanton_white(t).to_json()
    code, out, _ = run(capsys, "psi", "--tuple", json.dumps(image), "--k", "3", "--json")
    assert RibbonTableau.from_json(out) == t
    _, out, _ = run(capsys, "psi", "--shape", "2,2", "--weight", "1,1", "--k", "2")
    assert out.splitlines()[0] == "core []  quotient [[1], [1]]"
    assert len(out.splitlines()) == 3


def test_classes(capsys):
    code, out, _ = run(capsys, "classes", "--shape-tuple", "[[2],[2],[4]]", "--weight", "3,2,2,1", "--json")
    data = json.loads(out)
    assert code == 0
    assert len(data) == 16 and sum(c["size"] for c in data) == 57
    assert max(c["size"] for c in data) == 12


def test_fermionic(capsys):
    _, out, _ = run(capsys, "fermionic", "--weight", "2,1,1", "--rows", "2,2")
    assert Polynomial.parse(out.strip()) == fermionic_polynomial((2, 1, 1), (2, 2))
    code, out, _ = run(capsys, "fermionic", "--weight", "3,1,1,2", "--rows", "3,2,2", "--shapes", "[[2,1],[3,1],[3,2],[3,3,1]]")
    assert code == 0


def test_verify(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "examples")
    assert code == 0 and out.startswith("OK  examples")
    code, out, _ = run(capsys, "verify", "--suite", "rectangular", "--n", "2", "--k", "2", "--json")
    assert code == 0 and json.loads(out)[0]["ok"]
    code, out, _ = run(capsys, "verify", "--suite", "column", "--n", "1", "--k", "2")
    assert code == 0 and out.startswith("OK  column")


def test_usage_errors_exit_two(capsys):
    assert run(capsys, "hl", "--lambda", "9")[0] == 2
    assert run(capsys, "cospin", "--shape", "1,3", "--weight", "1", "--k", "1")[0] == 2
    assert run(capsys, "theta", "--tuple", "[[1,")[0] == 2
    assert run(capsys, "psi")[0] == 2
    assert run(capsys, "verify", "--suite", "rectangular")[0] == 2
    code, _, err = run(capsys, "cospin", "--shape", "2,2", "--weight", "1", "--k", "2")
    assert code == 2 and err.startswith("error:")
    with pytest.raises(SystemExit):
        main(["hl"])


def test_deterministic_and_module_entry_point():
    cmd = [sys.executable, "-m", "ribbonhl", "classes", "--shape-tuple", "[[2],[2],[4]]", "--weight", "3,2,2,1"]
    first = subprocess.run(cmd, capture_output=True, text=True, check=True).stdout
    second = subprocess.run(cmd, capture_output=True, text=True, check=True).stdout
    assert first == second and first
