from __future__ import annotations

import json
import subprocess
import sys
from pathlib import Path

import pytest

from golden_cases import CASES
from pconstant import corpus
from pconstant.cli import main
from pconstant.formats import serialize_table
from pconstant.symchar import sym_character_table

GOLDEN = Path(__file__).parent / "golden"


def run(argv, capsys):
    rc = main(argv)
    out = capsys.readouterr()
    return rc, out.out, out.err


@pytest.mark.parametrize("name", sorted(CASES))
def test_golden_outputs(name, capsys):
    rc, out, _ = run(CASES[name], capsys)
    assert rc == 0
    assert out == (GOLDEN / name).read_text()
    if name.endswith(".json"):
        json.loads(out)


def test_outputs_are_deterministic(capsys):
    argv = ["dixon", str(corpus.fixture_path("alt6")), "--seed", "3"]
    assert run(argv, capsys)[1] == run(argv, capsys)[1]


def test_examples(capsys):
    assert run(["zsigmondy", "2", "6"], capsys)[1].strip() == "none"
    assert run(["zsigmondy", "2", "3"], capsys)[1].strip() == "7"
    rc, out, _ = run(["verify", "m22-exception", "--json"], capsys)
    data = json.loads(out)
    assert rc == 0 and data["passed"]
    assert data["evidence"]["witness"] == [{"degree": 385, "constant": "-2"}]
    rc, out, _ = run(["pconst", "sym", "10", "5", "--json"], capsys)
    entries = json.loads(out)["entries"]
    assert all(e["defect"] == 0 for e in entries if e["degree"] > 1 and e["constant"] != "nonconstant")


def test_dixon_on_fixture(capsys):
    rc, out, _ = run(["dixon", str(corpus.fixture_path("sym5"))], capsys)
    assert rc == 0
    assert out.splitlines()[1] == "%order 120"


def test_pconst_table_file(tmp_path, capsys):
    path = tmp_path / "s5.tbl"
    path.write_text(serialize_table(sym_character_table(5)))
    rc, out, _ = run(["pconst", "table", str(path), "5", "--json"], capsys)
    assert rc == 0
    hits = [e for e in json.loads(out)["entries"] if e["degree"] > 1 and e["defect"] > 0 and e["constant"] != "nonconstant"]
    assert sorted(e["degree"] for e in hits) == [4, 4, 6]


def test_out_flag(tmp_path, capsys):
    target = tmp_path / "out.txt"
    rc, out, _ = run(["sym-table", "3", "--out", str(target)], capsys)
    assert rc == 0 and out == ""
    assert target.read_text().startswith("%group Sym3")


def test_verify_supplied_table(tmp_path, capsys):
    path = tmp_path / "sl2_5.tbl"
    path.write_text(serialize_table(corpus.table("sl2_5")))
    rc, out, _ = run(["verify", "thm-lie", "p=5", "family=A1", "--table", str(path), "--json"], capsys)
    assert rc == 0 and json.loads(out)["passed"]
    # wrong family: A2 forbids the +1 neighbour, so verification fails
    rc, out, _ = run(["verify", "thm-lie", "p=5", "family=2A2", "--table", str(path)], capsys)
    assert rc == 1


@pytest.mark.parametrize(
    "argv",
    [
        ["zsigmondy", "2", "2"],
        ["lie", "order", "B1", "3"],
        ["lie", "order", "A1", "6"],
        ["pconst", "sym", "4", "5"],
        ["dixon", "/nonexistent/file.gens"],
        ["verify", "nope"],
        ["alt-table", "2"],
    ],
)
def test_error_exit_codes(argv, capsys):
    with pytest.raises(SystemExit) as info:
        raise SystemExit(main(argv))
    assert info.value.code == 2


def test_strict_table_rejected(tmp_path, capsys):
    text = serialize_table(sym_character_table(3)).replace("%char 2 2 0 -1", "%char 2 2 0 1")
    path = tmp_path / "bad.tbl"
    path.write_text(text)
    assert run(["pconst", "table", str(path), "3", "--strict"], capsys)[0] == 2
    assert run(["verify", "thm-trichotomy", "p=3", "--table", str(path)], capsys)[0] == 2


def test_bound_environment(tmp_path):
    env = {"PCONST_BOUND": "100", "PATH": ""}
    out = subprocess.run(
        [sys.executable, "-m", "pconstant", "dixon", str(corpus.fixture_path("alt6"))],
        capture_output=True, text=True, env=env,
    )
    assert out.returncode == 2
    assert "more than 100 elements" in out.stderr
