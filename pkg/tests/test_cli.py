import json

import pytest
from click.testing import CliRunner

from core.config import settings
from apps.farey import parse_symbol
from apps.cli import farey


@pytest.fixture
def runner():
    return CliRunner()


def test_version(runner):
    result = runner.invoke(farey, ["--version"])
    assert result.exit_code == 0
    assert settings.APP_VERSION in result.output


def test_symbol_for_gamma2(runner):
    result = runner.invoke(farey, ["symbol", "--group", "gamma:2"])
    assert result.exit_code == 0
    assert result.output.strip() == "[-oo 0 1 2 oo | 1 2 2 1]"
    assert parse_symbol(result.output) == parse_symbol("[-oo 0 1 2 oo | 1 2 2 1]")


def test_symbol_json(runner):
    result = runner.invoke(farey, ["symbol", "--symbol", "[-oo 0 1 oo | 1 e 1]", "--json"])
    assert result.exit_code == 0
    document = json.loads(result.output)
    assert document["vertices"] == ["-oo", "0", "1", "oo"]
    assert document["pairings"] == ["1", "e", "1"]


def test_invariants_json(runner):
    result = runner.invoke(farey, ["invariants", "--group", "gamma0:2", "--json"])
    assert result.exit_code == 0
    document = json.loads(result.output)
    assert {k: document[k] for k in ("index", "genus", "cusps", "e2", "e3", "level")} == {
        "index": 3, "genus": 0, "cusps": 2, "e2": 1, "e3": 0, "level": 2,
    }


def test_invariants_text(runner):
    result = runner.invoke(farey, ["invariants", "--group", "gamma:2"])
    assert result.exit_code == 0
    assert "index: 6" in result.output
    assert "cusp oo: width 2" in result.output


def test_contains(runner):
    result = runner.invoke(farey, ["contains", "--group", "gamma:2", "--matrix", "1,1,0,1"])
    assert result.exit_code == 0
    assert result.output.strip() == "no"
    result = runner.invoke(farey, ["contains", "--group", "gamma:2", "--matrix", "1,2,0,1", "--word"])
    assert result.output.splitlines() == ["yes", "g1"]


def test_contains_json(runner):
    result = runner.invoke(farey, ["contains", "--group", "gamma0:3", "--matrix", "1,0,3,1", "--json"])
    document = json.loads(result.output)
    assert document["verdict"] is True
    assert document["terminal"] in ("IDENTITY", "FREE_PAIRED_WITH_ZERO_INFINITY", "EVEN_ZERO_INFINITY")


def test_generators(runner):
    result = runner.invoke(farey, ["generators", "--group", "gamma:2"])
    assert result.exit_code == 0
    assert result.output.splitlines() == [
        "g1 = 1,2,0,1  (order infinite)",
        "g2 = 3,-2,2,-1  (order infinite)",
    ]
    document = json.loads(runner.invoke(farey, ["generators", "--group", "gamma0:2", "--json"]).output)
    assert [g["order"] for g in document] == ["infinite", "2"]
    assert document[0]["edges"] == [0, 2]


def test_cosets(runner):
    result = runner.invoke(farey, ["cosets", "--group", "gamma0:2"])
    assert result.exit_code == 0
    lines = result.output.splitlines()
    assert len(lines) == 3 and lines[0] == "1,0,0,1"
    result = runner.invoke(farey, ["cosets", "--group", "gamma0:2", "--method", "bfs", "--json"])
    assert json.loads(result.output)["index"] == 3


def test_cosets_bfs_cap(runner):
    result = runner.invoke(farey, ["cosets", "--group", "gamma:3", "--method", "bfs", "--cap", "4"])
    assert result.exit_code == 1
    assert "error:" in result.output


def test_permrep(runner):
    result = runner.invoke(farey, ["permrep", "--symbol", "[-oo 0 oo | o o]"])
    assert result.exit_code == 0
    assert result.output.splitlines() == ["mu: 2", "e: (1 2)", "v: ()", "l: (1 2)", "r: (1 2)"]


def test_congruence(runner):
    result = runner.invoke(farey, ["congruence", "--group", "gamma0:4"])
    assert result.exit_code == 0
    assert "congruence: yes" in result.output
    result = runner.invoke(
        farey, ["congruence", "--group", "perm:e=(1 2)(3 4)(5 6),v=(2 3 7)(4 5 6)", "--json"]
    )
    document = json.loads(result.output)
    assert document == {"level": 6, "hsu": False, "wohlfahrt": False, "congruence": False}


def test_congruence_inconclusive(runner):
    result = runner.invoke(farey, ["congruence", "--group", "gamma0:11", "--method", "wohlfahrt"])
    assert result.exit_code == 1
    result = runner.invoke(farey, ["congruence", "--group", "gamma0:11"])
    assert result.exit_code == 0
    assert "wohlfahrt: inconclusive" in result.output
    assert "congruence: yes" in result.output


def test_domain(runner):
    result = runner.invoke(farey, ["domain", "--symbol", "[-oo 0 oo | e o]"])
    assert result.exit_code == 0
    document = json.loads(result.output)
    assert [arc["kind"] for arc in document["arcs"]] == ["even-edge", "odd-edge", "odd-edge"]
    result = runner.invoke(farey, ["domain", "--group", "gamma:2", "--format", "svg"])
    assert result.exit_code == 0
    assert result.output.startswith("<svg")


def test_usage_errors(runner):
    assert runner.invoke(farey, ["symbol"]).exit_code == 2
    assert runner.invoke(farey, ["symbol", "--group", "gamma:2", "--symbol", "[-oo 0 oo | e o]"]).exit_code == 2
    assert runner.invoke(farey, ["congruence", "--group", "gamma:2", "--method", "magic"]).exit_code == 2
    assert runner.invoke(farey, ["nonsense"]).exit_code == 2


def test_domain_errors(runner):
    result = runner.invoke(farey, ["contains", "--group", "gamma:2", "--matrix", "1,1,1,1"])
    assert result.exit_code == 1
    assert "error:" in result.output
    result = runner.invoke(farey, ["symbol", "--symbol", "[-oo 0 2 oo | 1 e 1]", "--json"])
    assert result.exit_code == 1
    assert json.loads(result.output)["code"] == "SYMBOL_ERROR"
    result = runner.invoke(farey, ["symbol", "--group", "gamma0:13", "--max-edges", "4"])
    assert result.exit_code == 1


@pytest.mark.parametrize("args", [
    ["--group", "gamma0:²"],
    ["--symbol", "[-oo 0 oo | ¹ ¹]"],
    ["--group", "perm:e=(1 ²),v=()"],
], ids=["level", "pairing", "cycle"])
def test_non_ascii_digits_are_rejected(runner, args):
    result = runner.invoke(farey, ["symbol", *args])
    assert result.exit_code == 1
    assert not isinstance(result.exception, ValueError)
    assert "error:" in result.output
