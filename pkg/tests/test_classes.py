import pytest

from planecensus import (
    classify,
    gamma2_linear_scan,
    gen_grid,
    gen_polygon,
    gen_prism,
    gen_wheel,
    scan_inputs,
)
from planecensus.errors import LengthMismatch


class TestClassify:
    def test_cube(self, cube):
        r = classify(cube)
        assert r.two_connected
        assert r.uniform_gonality == 4
        assert r.gamma1
        assert r.gamma2          # interior degree-3 vertices break uniformity 4
        assert not r.gamma3_strict
        assert not r.gamma3_mixed34

    def test_grid_not_gamma2(self, grid_2x2):
        r = classify(grid_2x2)
        assert r.gamma1 and r.uniform_gonality == 4
        assert not r.gamma2      # the only interior vertex has degree 4

    def test_bigger_grid_still_not_gamma2(self):
        r = classify(gen_grid(3, 4))
        assert r.gamma1 and not r.gamma2

    def test_prism3_gamma3_readings(self, prism3):
        r = classify(prism3)
        assert r.two_connected
        assert r.uniform_gonality is None   # gonalities {3, 4}
        assert not r.gamma1
        assert not r.gamma3_strict
        assert r.gamma3_mixed34

    def test_k4_gamma3_strict(self, k4):
        r = classify(k4)
        assert r.uniform_gonality == 3
        assert r.gamma3_strict
        assert r.gamma3_mixed34

    def test_polygon(self):
        r = classify(gen_polygon(7))
        assert r.gamma1 and r.uniform_gonality == 7
        assert not r.gamma2 and not r.gamma3_strict and not r.gamma3_mixed34

    def test_bowtie_fails_everything(self, bowtie):
        r = classify(bowtie)
        assert not r.two_connected
        assert not (r.gamma1 or r.gamma2 or r.gamma3_strict or r.gamma3_mixed34)

    def test_hierarchy(self, c3, c4, k4, w4, cube, prism3, grid_2x2, bowtie):
        for pg in (c3, c4, k4, w4, cube, prism3, grid_2x2, bowtie):
            r = classify(pg)
            if r.gamma2:
                assert r.gamma1 and r.uniform_gonality == 4
            if r.gamma3_strict:
                assert r.gamma1 and r.uniform_gonality == 3
                assert r.gamma3_mixed34
            if r.gamma1:
                assert r.two_connected

    def test_max_degree_reported(self, cube):
        assert classify(cube).max_degree == 3
        assert classify(gen_wheel(6)).max_degree == 6


class TestLinearScan:
    def test_cube_member_full_pass(self, cube):
        result = gamma2_linear_scan(*scan_inputs(cube))
        assert result.is_member
        assert bool(result)
        assert result.row_visits == 8   # no early exit: every row is counted

    def test_grid_non_member(self, grid_2x2):
        result = gamma2_linear_scan(*scan_inputs(grid_2x2))
        assert not result.is_member
        assert result.row_visits <= 9

    def test_c4_vacuous_non_member(self, c4):
        # uniform 4-gon interior but no interior vertex at all
        result = gamma2_linear_scan(*scan_inputs(c4))
        assert not result

    def test_flag_false_skips_rows(self, k4):
        rows, marks, flag = scan_inputs(k4)
        assert not flag   # triangle interior, not a quadrangulation
        result = gamma2_linear_scan(rows, marks, flag)
        assert not result.is_member
        assert result.row_visits == 0

    def test_bowtie_flag_false(self, bowtie):
        _, _, flag = scan_inputs(bowtie)
        assert not flag

    def test_length_mismatch(self, cube):
        rows, marks, flag = scan_inputs(cube)
        with pytest.raises(LengthMismatch):
            gamma2_linear_scan(rows, marks[:-1], flag)

    @pytest.mark.parametrize("builder", [
        lambda: gen_polygon(4),
        lambda: gen_grid(2, 2),
        lambda: gen_grid(2, 3),
        lambda: gen_prism(3),
        lambda: gen_prism(4),
        lambda: gen_prism(6),
        lambda: gen_wheel(3),
        lambda: gen_wheel(5),
    ])
    def test_agrees_with_classify(self, builder):
        pg = builder()
        assert bool(gamma2_linear_scan(*scan_inputs(pg))) == classify(pg).gamma2

    def test_visits_bounded_by_vertex_count(self):
        for pg in (gen_prism(4), gen_prism(8), gen_grid(3, 3)):
            result = gamma2_linear_scan(*scan_inputs(pg))
            assert result.row_visits <= pg.vertex_count
