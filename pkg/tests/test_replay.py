import json
from dataclasses import replace

import pytest

from mfq.replay import (ASSUMPTIONS, G3_CANDIDATES, ExclusionVerdict, frontier_g3, injected_subgroup_ledger,
                        replay_g3, replay_g4, theorem3_filter)


@pytest.fixture(scope="module")
def g3(catalog):
    return replay_g3(catalog)


def test_theorem3_filter_examples(catalog):
    assert not theorem3_filter(3, catalog.get("S6(3)")).excluded
    assert not theorem3_filter(3, catalog.get("3D4(2)")).excluded
    v = theorem3_filter(3, catalog.get("McL"))
    assert v.excluded == (14 not in catalog.get("McL").spectrum)
    no14 = replace(catalog.get("A7"), spectrum=(1, 2, 3, 4, 5, 6, 7))
    assert theorem3_filter(3, no14).label == "missing-order(14)"
    # at g = 4 the order to look for is 18
    assert theorem3_filter(4, catalog.get("A7")).label == "missing-order(18)"


def test_verdict_validation():
    with pytest.raises(ValueError):
        ExclusionVerdict("X", "missing-order")
    with pytest.raises(ValueError):
        ExclusionVerdict("X", "no-S5", (8,))
    with pytest.raises(ValueError):
        ExclusionVerdict("X", "bogus")
    assert ExclusionVerdict("X", "missing-order", (8, 12)).label == "missing-order(8,12)"


def test_g3_candidates_each_get_one_rule(g3):
    names = [v.name for v in g3.verdicts]
    assert set(names) == G3_CANDIDATES and len(names) == len(set(names))
    assert set(g3.survivors) | {v.name for v in g3.verdicts if v.excluded} == G3_CANDIDATES
    assert all(v.rule == "missing-order" for v in g3.verdicts)


def test_g3_ok_with_u33_finding(g3):
    assert g3.ok and not g3.survivors
    assert any("U3(3)" in f and "Q8" in f for f in g3.findings)
    assert all(ok for _, ok, _ in g3.cross_checks)


def test_g3_mentions_assumptions(g3):
    text = g3.to_text()
    for key, _ in ASSUMPTIONS:
        assert key in text
    assert "conclusion:" in text and "status: OK" in text


def test_g3_json_orders_are_strings(g3):
    d = json.loads(g3.to_json())
    assert isinstance(d["inputs"]["bound"], str)
    assert d["survivors"] == []


def test_ledger_precondition(g3):
    # a failed ledger entry makes the report refuse success
    bad = replace(g3.ledger[0], kernel_genus=99)
    g3_bad = replace(g3, ledger=[bad] + g3.ledger[1:])
    assert not g3_bad.ok


def test_g4_rules(catalog):
    rep = replay_g4(catalog)
    assert rep.ok and not rep.survivors
    by = {v.name: v for v in rep.verdicts}
    assert by["A5"].rule == "small-index"
    assert by["L2(7)"].rule == "small-index"
    assert all(v.rule in ("small-index", "no-S5", "missing-order") for v in rep.verdicts)


def test_frontier_reports_discrepancy_not_crash(catalog):
    rep = frontier_g3(catalog)
    assert {"3D4(2)", "McL"} <= set(rep.survivors)
    assert all(r != "S6(3)" for r in (v.name for v in rep.verdicts))
    # U3(17) has no element of order 14, so the order-14 filter removes it
    assert 14 not in catalog.get("U3(17)").spectrum
    assert any("U3(17)" in d for d in rep.discrepancies)


def test_ledger_genus_guard():
    with pytest.raises(ValueError):
        injected_subgroup_ledger(5)
