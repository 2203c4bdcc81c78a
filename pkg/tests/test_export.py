import csv

from braid_garside import conjugacy, normalform, words
from braid_garside.generators import families
from braid_garside.stores import ReproduceResult
from braid_garside.stores.export import to_csv


def test_invariant_report_csv(tmp_path):
    w = words.parse("1", 3, "old")
    report = conjugacy.to_report(conjugacy.class_invariants(normalform.normalize(w)), word=w)
    path = tmp_path / "invariants.csv"
    to_csv([report, report], path)

    with open(path) as f:
        rows = list(csv.DictReader(f))
    assert len(rows) == 2
    assert rows[0]["orbit_sizes"] == "1 1"
    assert rows[0]["word"] == "1"
    assert rows[0]["presentation"] == "old"
    assert list(rows[0]) == list(report)


def test_reproduce_result_csv(tmp_path):
    results = [families.run_case(case) for case in families.generate_cases()]
    path = tmp_path / "cases.csv"
    to_csv(results, path, record_type=ReproduceResult)

    with open(path) as f:
        rows = list(csv.DictReader(f))
    assert [row["family"] for row in rows][:2] == ["golden", "new"]
    assert rows[0]["expected_cyclings"] == "3"
