import csv
import json

import pytest

from braid_garside import cli, normalform, words
from braid_garside.stores import sss_async
from braid_garside.generators import families


def run(capsys, *argv):
    code = cli.main(list(argv))
    return code, capsys.readouterr()


def test_normal_form_golden(capsys):
    code, out = run(capsys, "nf", "-n", "5", "-p", "new", families.GOLDEN_WORD)
    assert code == cli.EXIT_OK
    assert out.out.strip() == "D^0 | [2:1][5:3] | [3:2]"


def test_normal_form_delta(capsys):
    code, out = run(capsys, "nf", "-n", "3", "1 2 1")
    assert code == cli.EXIT_OK
    assert out.out.strip() == "D^1"


def test_normal_form_json(capsys):
    code, out = run(capsys, "nf", "-n", "3", "--json", "1 2")
    assert code == cli.EXIT_OK
    assert json.loads(out.out) == {"n": 3, "presentation": "old", "u": 0, "factors": ["(3,1,2)"]}


@pytest.mark.parametrize(
    "argv",
    [
        ("nf", "-n", "3", "4"),
        ("nf", "-n", "3", "x"),
        ("nf", "-n", "3", "-p", "new", "2"),
        ("nf", "-n", "1", "1"),
        ("inv", "-n", "3", "--cap", "0", "1"),
    ],
)
def test_input_errors(capsys, argv):
    code, out = run(capsys, *argv)
    assert code == cli.EXIT_INPUT
    assert out.err.startswith("error:")


def test_invariants_json(capsys):
    code, out = run(capsys, "inv", "-n", "3", "--json", "1")
    assert code == cli.EXIT_OK
    report = json.loads(out.out)
    assert report["inf"] == 0
    assert report["sup"] == 1
    assert report["geodesic_length"] == 1
    assert report["sss_size"] == 2
    assert report["orbit_sizes"] == [1, 1]
    assert report["word"] == "1"


def test_invariants_trivial_word(capsys, tmp_path):
    csv_path = tmp_path / "inv.csv"
    code, out = run(capsys, "inv", "-n", "4", "-p", "new", "", "--csv", str(csv_path))
    assert code == cli.EXIT_OK
    assert "sss_size: 1" in out.out
    assert "geodesic_length: 0" in out.out
    with open(csv_path) as f:
        rows = list(csv.DictReader(f))
    assert rows[0]["sss_size"] == "1"


@pytest.mark.parametrize(
    "first, second, expected", [("1", "2", "true"), ("1 1", "1 2", "false")]
)
def test_conjugate(capsys, first, second, expected):
    code, out = run(capsys, "conj", "-n", "3", first, second)
    assert code == cli.EXIT_OK
    assert out.out.splitlines()[0] == expected


def test_conjugate_json(capsys):
    code, out = run(capsys, "conj", "-n", "4", "-p", "new", "--json", "2.1", "4.3")
    assert code == cli.EXIT_OK
    payload = json.loads(out.out)
    assert payload["conjugate"] is True
    assert payload["exponent_sums"] == [1, 1]


def test_cycle_profile(capsys):
    code, out = run(capsys, "cycle", "-n", "5", "-p", "new", "--profile", families.GOLDEN_WORD)
    assert code == cli.EXIT_OK
    assert out.out.split("\n")[:3] == ["1 0", "2 0", "3 1"]


def test_cycle_once(capsys):
    code, out = run(capsys, "cycle", "-n", "5", "-p", "new", families.GOLDEN_WORD)
    assert code == cli.EXIT_OK
    assert out.out.strip() == families.GOLDEN_CHAIN[1]


def test_sss(capsys):
    code, out = run(capsys, "sss", "-n", "3", "--json", "1")
    assert code == cli.EXIT_OK
    payload = json.loads(out.out)
    assert payload["size"] == 2
    assert sorted(payload["members"]) == ["D^0 | (1,3,2)", "D^0 | (2,1,3)"]


def test_sss_cap(capsys):
    code, out = run(capsys, "sss", "-n", "3", "--cap", "1", "1")
    assert code == cli.EXIT_COMPUTATION
    assert "1 members found" in out.err


@pytest.mark.parametrize(
    "argv, expected",
    [
        (("convert", "-n", "3", "-p", "new", "3.1"), "2 1 -2"),
        (("convert", "-n", "3", "2"), "3.2"),
        (("convert", "-n", "3", "--to", "old", "1 2"), "1 2"),
    ],
)
def test_convert(capsys, argv, expected):
    code, out = run(capsys, *argv)
    assert code == cli.EXIT_OK
    assert out.out.strip() == expected


def test_reproduce(capsys):
    code, out = run(capsys, "reproduce")
    assert code == cli.EXIT_OK
    lines = out.out.strip().splitlines()
    assert len(lines) == len(list(families.generate_cases())) + len(families.SHARP_BOUNDS)
    assert any(line.startswith("PASS b3-bound") for line in lines)
    assert all(line.startswith("PASS") for line in lines)


def test_reproduce_json_and_csv(capsys, tmp_path):
    csv_path = tmp_path / "cases.csv"
    code, out = run(capsys, "reproduce", "--json", "--samples", "20", "--csv", str(csv_path))
    assert code == cli.EXIT_OK
    payload = json.loads(out.out)
    assert payload["violations"] == 0
    assert [check["worst"] for check in payload["bounds"]] == [1, 2]
    assert all(check["passed"] for check in payload["bounds"])
    golden = payload["cases"][0]
    assert golden["family"] == "golden"
    assert normalform.equal(words.parse(golden["word"], 5, "new"), families.golden_word())
    with open(csv_path) as f:
        rows = list(csv.DictReader(f))
    assert len(rows) == len(payload["cases"])
    assert all(row["passed"] == "True" for row in rows)


def test_sss_closure_failure(capsys, monkeypatch):
    def conjugate(member, a):
        raise RuntimeError("conjugation failed on purpose")

    monkeypatch.setattr(sss_async, "conjugate_by_factor", conjugate)
    code, out = run(capsys, "sss", "-n", "3", "1")
    assert code == cli.EXIT_COMPUTATION
    assert "failed for 1 members" in out.err
    assert "1 members found" in out.err
