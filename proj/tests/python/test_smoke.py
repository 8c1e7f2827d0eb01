"""Smoke tests for the python module."""

import math

import pytest

import npc2


def test_generate_and_counts():
    oct_ = npc2.generate("octahedron")
    assert len(oct_.vertices) == 6
    assert len(oct_.edges) == 12
    assert len(oct_.triangles) == 8


def test_validation_errors_surface_as_exceptions():
    with pytest.raises(npc2.Npc2Error):
        npc2.complex(vertices=[0, 1], triangles=[[0, 1, 9]])


def test_homology_of_sphere_and_torus():
    assert npc2.homology(npc2.generate("octahedron"))["betti"] == (1, 0, 1)
    torus = npc2.generate("torus_grid", {"n": 3})
    assert npc2.homology(torus)["betti"] == (1, 2, 1)


def test_link_condition_octahedron():
    report = npc2.check_link_condition(npc2.generate("octahedron"))
    assert report["fail"] == 6
    assert not report["nonpositively_curved"]
    for entry in report["vertices"]:
        assert entry["systole"] == pytest.approx(4 * math.pi / 3, abs=1e-9)


def test_collapsibility():
    disk = npc2.generate("disk_grid", {"n": 3})
    result = npc2.is_collapsible(disk)
    assert result["verdict"] == "YES"
    assert result["terminal"] in range(9)
    assert npc2.is_collapsible(npc2.generate("octahedron"))["verdict"] == "NO"


def test_cat0_verdicts():
    assert npc2.is_cat0(npc2.generate("octahedron"))["verdict"] == "NO"
    disk = npc2.generate("disk_grid", {"n": 3})
    assert npc2.is_cat0(disk, assume_flat_ok=True)["verdict"] == "YES"


def test_scan_is_clean_on_the_square():
    disk = npc2.generate("disk_grid", {"n": 2})
    report = npc2.strong_injectivity_scan(disk)
    assert report["verdict"] == "CLEAN"
    assert report["violations"] == 0
    assert report["unknowns"] == 0


def test_systole_multigraph():
    assert npc2.systole(2, [(0, 1, 1.0), (0, 1, 2.5)]) == pytest.approx(3.5)
    assert math.isinf(npc2.systole(2, [(0, 1, 1.0)]))


def test_parse_complex_roundtrip():
    parsed = npc2.parse_complex('{"vertices": [0, 1, 2], "triangles": [[0, 1, 2]]}')
    assert parsed == npc2.generate("triangle")
