import json

import pytest

import multidesign as md


def test_construct_and_verify():
    d = md.construct(13)
    assert d.kind == "decomposition"
    assert (d.hexagon_count, d.prism_count) == (7, 4)
    report = md.verify(d)
    assert report.valid
    assert report.failures == []


def test_packing_and_covering_sizes():
    assert len(md.construct(14, "packing").leave) == 1
    assert len(md.construct(20, "covering").padding) == 2
    assert len(md.construct(10, "covering").padding) == 3


def test_infeasible_order_raises():
    with pytest.raises(ValueError):
        md.construct(7)
    with pytest.raises(ValueError):
        md.construct(8, "partition")


def test_classify():
    r = md.classify(9)
    assert not r.decomposition_exists
    assert (r.min_leave, r.min_padding) == (3, 3)
    assert r.notes
    assert md.classify(10).block_solutions == [(6, 1), (3, 3)]


def test_json_round_trip():
    d = md.construct(19)
    text = d.to_json()
    assert json.loads(text)["host"] == {"type": "complete", "n": 19}
    assert md.Design.from_json(text) == d
    with pytest.raises(ValueError):
        md.Design.from_json("{}")


def test_catalog():
    keys = md.catalog_keys()
    assert "covering-8" in keys
    assert md.catalog_get("covering-8").padding == [(0, 7), (2, 4)]
    with pytest.raises(KeyError):
        md.catalog_get("triangle-3")


def test_search_and_certificates():
    status, design, nodes = md.search(7)
    assert status == "exhausted-none" and design is None and nodes >= 0
    status, design, _ = md.search(9, "hexagon")
    assert status == "found" and design.hexagon_count == 6
    assert md.confirm_nonexistence(7) == (True, True)


def test_verify_reports_findings():
    d = md.Design.from_json(md.catalog_get("decomposition-6").to_json().replace("[0, 1, 2, 3, 4, 5]", "[0, 1, 2, 3, 4, 4]"))
    report = md.verify(d)
    assert not report.valid
    assert report.failures[0][0] == "malformed-block"
