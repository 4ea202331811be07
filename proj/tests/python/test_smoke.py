import json
import os
import subprocess
from fractions import Fraction

import pytest

import preproj

CLI = os.environ.get("PREPROJ_CLI")
needs_cli = pytest.mark.skipif(not CLI, reason="PREPROJ_CLI not set")


def cli(*args, stdin=None):
    return subprocess.run([CLI, *args], input=stdin, capture_output=True, text=True)


def test_roots_and_p():
    roots = preproj.positive_roots("D_inf", [0, 1, 2, 3])
    assert len(roots) == 12
    assert {0: 1, 1: 1, 2: 2, 3: 1} in roots
    assert all(preproj.p_value("D_inf", r) == 0 for r in roots)
    assert preproj.p_value("A_plus_inf", {0: 2}) == -3


def test_exists_simple():
    cert = preproj.exists_simple("A_plus_inf", [-1, 1], {0: 1, 1: 1})
    assert cert["exists"] and cert["reason"] == "simple"
    blocked = preproj.exists_simple("A_plus_inf", [0, 0], {0: 1, 1: 1})
    assert not blocked["exists"] and blocked["reason"] == "blocking_decomposition"
    assert preproj.oracle_exists_simple("D_inf", [1, 1, -2], {0: 1, 1: 1, 2: 1})
    assert preproj.interval_conditions("A_plus_inf", [Fraction(-1, 2), "1/2"], 0, 1)


def test_enumerate_simples():
    found = preproj.enumerate_simples("A_plus_inf", [0, 0], [0, 1], jobs=2)
    assert [c["alpha"] for c in found] == [[[0, 1]], [[1, 1]]]


def test_khare():
    lam = preproj.khare_lambda([0, -4])
    assert lam["base"] == "khare"
    assert preproj.enumerate_vrs([0, -4], 10)[0] == {"s": 0, "r": 1, "dimension": 3}
    assert preproj.enumerate_vrs([], 10) == []


def test_dominate():
    d = preproj.dominate("A_plus_inf", [-1, 0, 0], [0, 1])
    assert d["word"] == [1, 0] and d["dominant"]


def test_extension_conditions():
    v = preproj.check_extension_conditions("A_plus_inf", [2], [[2]], [1], [0, "-1/2"], "1/2", verify=True)
    assert v["pass"] and v["relation_check"]
    v = preproj.check_extension_conditions("A_plus_inf", [1, 1], [[1], [1]], [1, 2], None, 1, verify=True)
    assert not v["pass"] and not v["relation_check"]


def chain_module():
    return {
        "quiver": {"family": "A_plus_inf"},
        "rank": 1,
        "weight": {"base": "explicit", "start": 0, "values": [-1, 1]},
        "nu": 0,
        "components": [{"tuple": [0], "dim": 1}, {"tuple": [1], "dim": 1}],
        "arrows": [
            {"tuple": [0], "position": 1, "arrow": "a_0_1", "matrix": {"shape": [1, 1], "entries": [[1]]}},
            {"tuple": [1], "position": 1, "arrow": "astar_0_1", "matrix": {"shape": [1, 1], "entries": [[1]]}},
        ],
        "transpositions": [],
    }


def test_reflect_round_trip():
    m = chain_module()
    w = [-1, 1]
    assert preproj.check_module(m, w)["pass"]
    once = preproj.reflect(m, 1, w)
    assert once["outside_lambda"] == []
    assert [c["tuple"] for c in once["components"]] == [[0]]
    twice = preproj.reflect(once, 1, once["weight"])
    assert preproj.check_module(twice, w)["pass"]
    assert preproj.is_isomorphic(twice, m, w)


def test_errors():
    with pytest.raises(preproj.ValidationError):
        preproj.exists_simple("A_plus_inf", [0], {0: -1})
    with pytest.raises(preproj.ValidationError):
        preproj.positive_roots("E_inf", [0])
    with pytest.raises(preproj.DomainError):
        preproj.oracle_exists_simple("A_plus_inf", [0], {0: 2})
    with pytest.raises(preproj.ValidationError):
        preproj.check_module("{not json", None)


def test_irrep():
    x = preproj.symmetric_group_irrep([2, 1])
    assert x["dim"] == 2 and len(x["generators"]) == 2


@needs_cli
def test_cli_khare_empty():
    r = cli("khare", "--f", "0", "--rmax", "10")
    assert r.returncode == 0 and r.stdout.strip() == ""


@needs_cli
def test_cli_classify():
    r = cli("classify", "--quiver", "A_plus_inf", "--weight", "explicit:[-1,1]", "--window", "0..1")
    assert r.returncode == 0
    lines = [json.loads(x) for x in r.stdout.splitlines()]
    assert [c["alpha"] for c in lines] == [[[0, 1], [1, 1]]]


@needs_cli
def test_cli_check_zero_module():
    doc = json.dumps({"quiver": {"family": "A_plus_inf"}, "rank": 2, "components": [], "arrows": []})
    r = cli("check-rep", "--module", "-", stdin=doc)
    assert r.returncode == 0 and json.loads(r.stdout)["pass"]


@needs_cli
def test_cli_reflect_twice(tmp_path):
    path = tmp_path / "m.json"
    path.write_text(json.dumps(chain_module()))
    once = cli("reflect", "--module", str(path), "--vertex", "0")
    assert once.returncode == 0, once.stderr
    twice = cli("reflect", "--module", "-", "--vertex", "0", stdin=once.stdout)
    assert twice.returncode == 0, twice.stderr
    check = cli("check-rep", "--module", "-", "--compare", str(path), stdin=twice.stdout)
    assert check.returncode == 0
    out = json.loads(check.stdout)
    assert out["pass"] and out["isomorphic"]


@needs_cli
def test_cli_exit_codes():
    assert cli("roots", "--quiver", "E_inf", "--window", "0..1").returncode == 2
    assert cli("oracle", "--quiver", "A_plus_inf", "--alpha", "0:2").returncode == 1
    assert cli("--help").returncode == 0
    assert cli("classify", "--bogus").returncode == 2


@needs_cli
def test_cli_induce_check():
    r = cli("induce-check", "--quiver", "A_plus_inf", "--partition", "2", "--diagrams", "1,1",
            "--vertices", "1", "--weight", "explicit:[0,1]", "--nu", "1", "--verify")
    assert r.returncode == 0
    out = json.loads(r.stdout)
    assert out["pass"] and out["relation_check"]
