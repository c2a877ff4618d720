import json

import pytest

from luroth.report import SECTIONS, build_suite


def test_suite_shape(suite_run):
    entries = suite_run.entries
    assert len(entries) >= 25
    assert {e.section for e in entries} == set(SECTIONS)
    assert all(e.provenance in ("paper", "derived") for e in entries)
    assert len({e.claim_id for e in entries}) == len(entries)


def test_suite_has_no_mismatches(suite_run):
    assert suite_run.ok, suite_run.summary()


def test_flagged_entries_show_both_values(suite_run):
    flagged = {e.claim_id: e for e in suite_run.entries if e.status == "flagged_discrepancy"}
    assert set(flagged) == {"h3,26-expression", "tau-small-list", "lemma-f1-strict"}
    assert "782/1423" in flagged["h3,26-expression"].actual
    assert "391/1689" in flagged["h3,26-expression"].actual
    assert all(e.flagged for e in flagged.values())


def test_json_is_deterministic(suite_run):
    doc = suite_run.to_json()
    assert json.dumps(doc) == json.dumps(suite_run.to_json())
    assert doc["counts"]["mismatch"] == 0


def test_parallel_run_preserves_order():
    serial = build_suite().run("expansions", workers=1)
    parallel = build_suite().run("expansions", workers=2)
    assert [e.to_json() for e in serial.entries] == [e.to_json() for e in parallel.entries]


def test_unknown_section():
    with pytest.raises(ValueError):
        build_suite().run("nope")


def test_crash_is_a_mismatch():
    suite = build_suite()
    entry = suite.entries[0]
    entry.compute = lambda: 1 / 0
    assert entry.run().status == "mismatch"
    assert entry.actual.startswith("error: ZeroDivisionError")
