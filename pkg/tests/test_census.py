import pytest

from planecensus import (
    classify_vertices,
    degree_census,
    gonality_histogram,
    verify_counting_identities,
)
from planecensus.census import DEGREE_SUM, FACE_INCIDENCE, VERTEX_PARTITION


class TestClassifyVertices:
    def test_c4_all_exterior(self, c4):
        interior, exterior = classify_vertices(c4)
        assert interior == frozenset()
        assert exterior == frozenset(range(4))

    def test_grid_center_interior(self, grid_2x2):
        interior, exterior = classify_vertices(grid_2x2)
        assert interior == frozenset({4})  # center of the 3x3 grid
        assert len(exterior) == 8

    def test_k4_hub_interior(self, k4):
        interior, exterior = classify_vertices(k4)
        assert interior == frozenset({3})
        assert exterior == frozenset({0, 1, 2})

    def test_partition(self, cube, prism3, bowtie):
        for pg in (cube, prism3, bowtie):
            interior, exterior = classify_vertices(pg)
            assert interior | exterior == frozenset(range(pg.vertex_count))
            assert interior & exterior == frozenset()


class TestDegreeCensus:
    def test_c4(self, c4):
        c = degree_census(c4)
        assert c.interior_by_degree == {}
        assert c.exterior_by_degree == {2: 4}
        assert c.max_degree == 2

    def test_grid(self, grid_2x2):
        c = degree_census(grid_2x2)
        assert c.interior_by_degree == {4: 1}
        assert c.exterior_by_degree == {2: 4, 3: 4}

    def test_cube(self, cube):
        c = degree_census(cube)
        assert c.interior_by_degree == {3: 4}
        assert c.exterior_by_degree == {3: 4}

    def test_totals(self, prism3):
        assert degree_census(prism3).vertex_total == 6


class TestGonalityHistogram:
    def test_c4(self, c4):
        assert gonality_histogram(c4).faces_by_gonality == {4: 1}

    def test_k4(self, k4):
        assert gonality_histogram(k4).faces_by_gonality == {3: 3}

    def test_prism(self, prism3):
        assert gonality_histogram(prism3).faces_by_gonality == {3: 1, 4: 3}

    def test_total_is_faces_minus_one(self, cube, grid_2x2):
        for pg in (cube, grid_2x2):
            assert gonality_histogram(pg).face_total == pg.face_count - 1


class TestCountingIdentities:
    @staticmethod
    def _verdicts(pg):
        c = degree_census(pg)
        h = gonality_histogram(pg)
        return {v.name: v for v in verify_counting_identities(pg, c, h)}

    def test_c4(self, c4):
        v = self._verdicts(c4)
        assert v[VERTEX_PARTITION].residual == 0
        assert v[DEGREE_SUM].residual == 0       # 2*4 = 2*4
        assert v[FACE_INCIDENCE].residual == 0   # 0 + 1*4 = 4*1

    def test_grid_hand_values(self, grid_2x2):
        # 2*12 = 4*1 + 3*4 + 2*4 ; 4*1 + (2*4 + 1*4) = 4*4
        v = self._verdicts(grid_2x2)
        assert all(entry.residual == 0 for entry in v.values())

    def test_bowtie_gates_incidence(self, bowtie):
        v = self._verdicts(bowtie)
        assert v[VERTEX_PARTITION].residual == 0
        assert v[DEGREE_SUM].residual == 0
        assert not v[FACE_INCIDENCE].applicable
        assert "NotTwoConnected" in v[FACE_INCIDENCE].note

    def test_degree_sum_holds_even_without_two_connectivity(self, bowtie):
        assert self._verdicts(bowtie)[DEGREE_SUM].residual == 0
