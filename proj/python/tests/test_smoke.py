import math

import pytest

import orthogeo

EDGE = {"kind": "graph", "vertices": ["b", "c"], "edges": [["b", "c"]]}
QUADRANT = {"kind": "graph", "vertices": ["b1", "b2", "c1", "c2"], "edges": [["b1", "c2"], ["b2", "c1"]]}
M3 = {
    "kind": "poset",
    "elements": ["0", "a", "b", "c", "1"],
    "covers": [["0", "a"], ["0", "b"], ["0", "c"], ["a", "1"], ["b", "1"], ["c", "1"]],
}
QX = {"b_coords": {"b1": "1", "b2": "2/5"}}
QY = {"b_coords": {"c1": "1/2", "c2": "1"}}


def test_edge_distance():
    assert orthogeo.distance(EDGE, {"b_coords": {"b": "1/2"}}, {"b_coords": {"c": "1/2"}}) == pytest.approx(1.0)


def test_quadrant_geodesic():
    g = orthogeo.geodesic(QUADRANT, QX, QY)
    assert g["length"] == pytest.approx(math.sqrt(4.81), abs=1e-9)
    assert g["length_sq"] == "481/100"
    assert g["arch"] == ["{b1,b2}", "{b1,c1}", "{c1,c2}"]
    assert [b["t"] for b in g["breakpoints"]] == ["0", "4/9", "1/2", "1"]


def test_quadrant_arches_and_msip():
    arches = orthogeo.arch(QUADRANT, QX, QY, all=True)["arches"]
    assert len(arches) == 3
    assert arches[0]["v_sq"] == "481/100"
    r = orthogeo.msip(QUADRANT, QX, QY, "2/5")
    assert r["ideal"] == "{b1,c1}"
    assert r["objective"] == "7/10"


def test_m3():
    flags = orthogeo.classify(M3)
    assert flags["lattice"] and flags["modular"]
    assert not flags["distributive"]
    d = orthogeo.distance(M3, {"coeffs": {"a": "1"}}, {"coeffs": {"b": "1"}})
    assert d == pytest.approx(math.sqrt(2))
    o = orthogeo.oracle(M3, {"coeffs": {"a": "1"}}, {"coeffs": {"b": "1"}}, n=4)
    assert o["oracle"] >= o["engine"] - 1e-9


def test_csv_and_cat0():
    csv = orthogeo.geodesic_csv(EDGE, {"b_coords": {"b": "1/2"}}, {"b_coords": {"c": "1/2"}}, 5)
    assert csv.splitlines()[0] == "t,b,c"
    assert len(csv.splitlines()) == 6
    assert orthogeo.cat0_check(EDGE, 20, seed=3)["max_violation"] <= 1e-6


def test_errors_carry_codes():
    with pytest.raises(orthogeo.OrthogeoError) as e:
        orthogeo.distance(EDGE, {"b_coords": {"b": "3/2"}}, {"b_coords": {"c": "1/2"}})
    assert e.value.code == "InvalidPoint"
    with pytest.raises(orthogeo.OrthogeoError) as e:
        orthogeo.validate("{not json")
    assert e.value.code == "ParseError"
