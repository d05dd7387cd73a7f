import json

import pytest

from rvdkit.audit import THEOREMS, audit
from rvdkit.enumeration import canonical_form
from rvdkit.graphio import parse_graph6
from rvdkit.graph import complete_graph, delete_edge


@pytest.fixture(scope="module")
def report5():
    return audit(5)


def test_every_check_runs(report5):
    assert sorted(e.name for e in report5.entries) == sorted(THEOREMS)


def test_all_but_max_size_pass(report5):
    failing = [e.name for e in report5.entries if e.status != "pass"]
    assert failing == ["max-size"]
    assert not report5.passed


def test_max_size_failure_is_the_rvd_three_cell(report5):
    entry = report5.status("max-size")
    assert entry.detail == "n=4 k=3: max 5 vs [6,6]"
    diamond = delete_edge(complete_graph(4), 2, 3)
    assert canonical_form(parse_graph6(entry.counterexample)) == canonical_form(diamond)


def test_cells(report5):
    assert report5.cells[(4, 1)] == 2
    assert sum(c for (n, _), c in report5.cells.items() if n == 5) == 21


def test_k3_bounds():
    r = audit(3, ["bounds"])
    assert r.passed and r.cells == {(2, 1): 1, (3, 1): 1, (3, 2): 1}


def test_budget_marks_skipped_not_pass():
    r = audit(4, ["cut-oracle"], budget=0.0)
    entry = r.status("cut-oracle")
    assert entry.status == "skipped" and "budget" in entry.detail
    assert not r.passed


def test_seed_env_is_honored(monkeypatch):
    monkeypatch.setenv("RVDKIT_SEED", "12345")
    assert audit(4, ["cut-oracle"], samples=5).passed


def test_report_formats(report5):
    text = report5.to_text()
    assert "FAIL    max-size" in text and text.rstrip().endswith("NOT all pass")
    data = json.loads(report5.to_json())
    assert data["n_max"] == 5 and not data["passed"]
    assert {e["name"] for e in data["entries"]} == set(THEOREMS)


def test_refuses_large_orders_and_unknown_checks():
    with pytest.raises(ValueError):
        audit(8)
    with pytest.raises(ValueError, match="unknown"):
        audit(4, ["bogus"])


def test_parallel_catalog_matches():
    a = audit(5, ["bounds", "rvd2"], jobs=2)
    b = audit(5, ["bounds", "rvd2"], jobs=1)
    assert a.cells == b.cells and a.passed and b.passed
