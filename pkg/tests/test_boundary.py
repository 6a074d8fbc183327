"""The four boundary-type sets, directly from their definitions."""

import pytest
from hypothesis import given, settings

import oracles
from strongbounds import (
    boundary_profile,
    boundary_set,
    contour_set,
    eccentric_set,
    from_arcs,
    is_boundary_vertex_of,
    metric_profile,
    periphery_set,
)
from strategies import strong_digraphs

CYCLE5 = [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]


@pytest.fixture(scope="module")
def p1(d1):
    return metric_profile(d1)


@pytest.fixture(scope="module")
def p2(d2):
    return metric_profile(d2)


class TestIsBoundaryVertexOf:
    def test_v5_is_boundary_vertex_of_v1(self, p2, d2):
        assert is_boundary_vertex_of(p2, d2, 4, 0)

    def test_self_never_boundary_with_neighbors(self, p2, d2):
        for v in range(d2.n):
            assert not is_boundary_vertex_of(p2, d2, v, v)

    def test_v3_boundary_vertex_of_nobody(self, p2, d2):
        assert not any(is_boundary_vertex_of(p2, d2, 2, u) for u in range(d2.n))


class TestGoldenSets:
    def test_boundary_d1(self, p1, d1):
        assert boundary_set(p1, d1) == {0, 2}

    def test_boundary_d2(self, p2, d2):
        assert boundary_set(p2, d2) == {0, 3, 4}

    def test_eccentric_d1(self, p1):
        assert eccentric_set(p1) == {0, 2}

    def test_eccentric_d2(self, p2):
        assert eccentric_set(p2) == {0, 4}

    def test_periphery_d1(self, p1):
        assert periphery_set(p1) == {0, 2}

    def test_periphery_d2(self, p2):
        assert periphery_set(p2) == {0, 4}

    def test_contour_d1(self, p1, d1):
        assert contour_set(p1, d1) == {0, 2}

    def test_contour_d2(self, p2, d2):
        assert contour_set(p2, d2) == {0, 4}


class TestDegenerateShapes:
    def test_complete_bidirected_all_boundary(self):
        arcs = [(a, b) for a in range(5) for b in range(5) if a != b]
        d = from_arcs(5, arcs)
        p = metric_profile(d)
        assert boundary_set(p, d) == set(range(5))

    def test_directed_cycle_self_centered(self):
        d = from_arcs(5, CYCLE5)
        p = metric_profile(d)
        everything = set(range(5))
        assert periphery_set(p) == everything
        assert contour_set(p, d) == everything

    def test_single_vertex_all_sets(self, k1):
        p = metric_profile(k1)
        bp = boundary_profile(p, k1)
        assert bp.boundary == bp.contour == bp.eccentricity_set == bp.periphery == {0}


class TestAgainstOracles:
    @settings(max_examples=60)
    @given(strong_digraphs())
    def test_all_four_sets(self, d):
        md = oracles.md_table(d.n, d.arcs)
        p = metric_profile(d)
        assert boundary_set(p, d) == oracles.boundary(d.n, d.arcs, md)
        assert eccentric_set(p) == oracles.eccentric(d.n, md)
        assert periphery_set(p) == oracles.periphery(d.n, md)
        assert contour_set(p, d) == oracles.contour(d.n, d.arcs, md)


class TestProperties:
    @settings(max_examples=60)
    @given(strong_digraphs())
    def test_inclusion_chains(self, d):
        bp = boundary_profile(metric_profile(d), d)
        assert bp.periphery <= bp.contour & bp.eccentricity_set
        assert bp.eccentricity_set | bp.contour <= bp.boundary

    @settings(max_examples=60)
    @given(strong_digraphs())
    def test_open_closed_equivalence(self, d):
        p = metric_profile(d)
        assert boundary_set(p, d, "open") == boundary_set(p, d, "closed")
        assert contour_set(p, d, "open") == contour_set(p, d, "closed")

    @settings(max_examples=60)
    @given(strong_digraphs())
    def test_all_sets_nonempty(self, d):
        bp = boundary_profile(metric_profile(d), d)
        assert bp.boundary and bp.contour and bp.eccentricity_set and bp.periphery

    def test_bad_neighborhood_flag(self, p1, d1):
        with pytest.raises(ValueError):
            boundary_set(p1, d1, "semiclosed")
