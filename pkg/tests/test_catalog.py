import json

import pytest

from mfq.catalog import (G4_BOUND, NON_ISOMORPHIC_PAIRS, VerifyBudget, canonical_name, dump_catalog,
                         enumerate_simple_groups, enumerate_simple_orders, load_catalog, record_from_json,
                         verify_record)
from mfq.classical import classical_order, parse_group_spec
from mfq.errors import CatalogError, InputError


def test_enumerate_small_bound():
    assert enumerate_simple_orders(400) == [("A5", 60), ("L2(7)", 168), ("A6", 360)]


def test_enumerate_against_known_count():
    # simple groups below one million, counted from the ATLAS order list
    names = [n for n, _ in enumerate_simple_orders(10 ** 6)]
    assert len(names) == 56
    assert {"M11", "M12", "J1", "M22", "J2", "Sz(8)", "A9"} <= set(names)
    assert len(names) == len(set(names))


def test_isomorphism_dedup():
    names = {n for n, _ in enumerate_simple_orders(25920 + 1)}
    for dup in ("L2(4)", "L2(5)", "L2(9)", "L3(2)", "S4(2)'"):
        assert dup not in names
    assert "S4(3)" in names or "U4(2)" in names


def test_non_isomorphic_pairs_both_present(catalog):
    for a, b in NON_ISOMORPHIC_PAIRS:
        ra, rb = catalog.get(a), catalog.get(b)
        assert ra is not rb and ra.order == rb.order
        assert ra.spectrum != rb.spectrum or ra.markers != rb.markers


def test_catalog_covers_g4_bound(catalog):
    assert {r.name for r in catalog} == {e.name for e in enumerate_simple_groups(G4_BOUND)}
    assert len(catalog) == 727


def test_records_are_consistent(catalog):
    for r in catalog:
        assert r.order == classical_order(r.spec)
        assert r.spectrum[0] == 1 and all(r.order % m == 0 for m in r.spectrum)
        assert set(r.provenance.values()) <= {"atlas-data", "computed", "formula"}


def test_lookup_is_case_insensitive_with_aliases(catalog):
    assert catalog.get("l3(2)").name == "L2(7)"
    assert catalog.get("psl(2,7)").name == "L2(7)"
    assert catalog.get("A5").name == catalog.get("L2(4)").name
    with pytest.raises(InputError):
        catalog.get("nonsense")


def test_canonical_names():
    assert canonical_name(parse_group_spec("psu(3,3)")) == "U3(3)"
    assert canonical_name(parse_group_spec("psp(6,2)")) == "S6(2)"
    assert canonical_name(parse_group_spec("sz(8)")) == "Sz(8)"


def test_roundtrip(tmp_path, catalog):
    p = tmp_path / "c.json"
    p.write_text(dump_catalog(list(catalog)), encoding="utf-8")
    again = load_catalog(p)
    assert [r.to_json() for r in again] == [r.to_json() for r in catalog]


def _one_record(catalog, name="L2(7)"):
    return catalog.get(name).to_json()


@pytest.mark.parametrize("mutate,where", [
    (lambda o: o.update(order="169"), "[0](L2(7)).order"),
    (lambda o: o.update(order=168), "[0](L2(7)).order"),
    (lambda o: o.update(spectrum=[1, 2, 5]), "[0](L2(7)).spectrum"),
    (lambda o: o.update(spectrum=[2, 1]), "[0](L2(7)).spectrum"),
    (lambda o: o["markers"].update(contains_q8="maybe"), "[0](L2(7)).markers.contains_q8"),
    (lambda o: o.update(family="XYZ"), "[0](L2(7)).family"),
    (lambda o: o["provenance"].update(order="guess"), "[0](L2(7)).provenance.order"),
    (lambda o: o.pop("aliases"), "[0]"),
])
def test_validation_paths(tmp_path, catalog, mutate, where):
    obj = _one_record(catalog)
    mutate(obj)
    p = tmp_path / "bad.json"
    p.write_text(json.dumps([obj]))
    with pytest.raises(CatalogError) as exc:
        load_catalog(p)
    assert where in str(exc.value)


def test_duplicate_names_rejected(tmp_path, catalog):
    obj = _one_record(catalog)
    p = tmp_path / "dup.json"
    p.write_text(json.dumps([obj, obj]))
    with pytest.raises(CatalogError, match="duplicate"):
        load_catalog(p)


def test_unreadable_and_malformed(tmp_path):
    with pytest.raises(CatalogError):
        load_catalog(tmp_path / "missing.json")
    p = tmp_path / "bad.json"
    p.write_text("{not json")
    with pytest.raises(CatalogError):
        load_catalog(p)
    p.write_text("{}")
    with pytest.raises(CatalogError, match="array"):
        load_catalog(p)


def test_record_from_json_rejects_bad_generators(catalog):
    obj = _one_record(catalog, "M11")
    obj["generators"][0][0] = obj["generators"][0][1]
    with pytest.raises(CatalogError, match="generators"):
        record_from_json(obj, "[0]")


@pytest.mark.parametrize("name,tier", [("A5", "a"), ("M11", "a"), ("U3(17)", "b"), ("J2", "c")])
def test_verify_tiers(catalog, name, tier):
    rep = verify_record(catalog.get(name), VerifyBudget(samples=300, seed=3))
    assert rep.tier == tier and rep.ok, rep.findings


def test_verify_detects_wrong_spectrum(catalog):
    from dataclasses import replace
    rec = replace(catalog.get("A7"), spectrum=(1, 2, 3, 4, 5, 7))
    rep = verify_record(rec)
    assert not rep.ok and any("spectrum" in f for f in rep.findings)


def test_mathieu_generators_have_right_order(catalog):
    from mfq.groups import enumerate_group
    for name in ("M11", "M12", "M22"):
        rec = catalog.get(name)
        assert len(enumerate_group(rec.genset(), cap=10 ** 6)) == rec.order
