import pytest

from arcdesign import feasibility_df, plan, plan_fixed_grid
from arcdesign.errors import InfeasibleParametersError


class TestPlan:
    def test_worked_example_20_rows(self):
        p = plan(4, 0.20, 173)
        assert (p.v, p.s) == (20, 11)
        assert p.test_line_capacity == 176
        assert p.surplus == 3
        assert p.check_proportion == pytest.approx(0.20)

    def test_nearest_ratio_rule_for_15_percent(self):
        p = plan(4, 0.15, 320)
        assert p.v == 27  # 4/27 is closer to 0.15 than 4/24
        assert 24 in p.alternatives

    def test_infeasible_with_suggestion(self):
        with pytest.raises(InfeasibleParametersError) as excinfo:
            plan(2, 0.5, 4)
        assert "-2" in str(excinfo.value)
        assert excinfo.value.suggestion == {"v": 4, "s": 4}

    def test_exact_ratio_wins(self):
        p = plan(2, 1 / 3, 24)
        assert p.v == 6

    def test_monotone_in_test_lines(self):
        previous = 0
        for t in range(120, 321, 25):
            p = plan(4, 0.2, t)
            assert p.s >= previous
            previous = p.s

    def test_more_columns_than_rows_rejected(self):
        with pytest.raises(InfeasibleParametersError, match="more columns than rows"):
            plan(4, 0.2, 400)

    def test_emitted_plan_is_feasible(self):
        for k, prop, t in [(3, 0.25, 72), (4, 0.2, 173), (5, 0.17, 200)]:
            p = plan(k, prop, t)
            assert p.feasible_df == feasibility_df(p.v, p.s, p.k) >= 0
            assert p.surplus >= 0
            assert p.v >= p.s

    def test_parameter_validation(self):
        with pytest.raises(InfeasibleParametersError):
            plan(1, 0.2, 10)
        with pytest.raises(InfeasibleParametersError):
            plan(3, 1.2, 10)
        with pytest.raises(InfeasibleParametersError):
            plan(3, 0.2, 0)


class TestPlanFixedGrid:
    def test_96_well_plate(self):
        p = plan_fixed_grid(8, 12, 3)
        assert (p.v, p.s) == (12, 8)
        assert p.check_proportion == pytest.approx(0.25)
        assert p.test_line_capacity == 72

    def test_384_well_plate_portrait(self):
        p = plan_fixed_grid(24, 16, 4)
        assert (p.v, p.s) == (24, 16)
        assert p.check_proportion == pytest.approx(4 / 24)
        assert p.test_line_capacity == 320

    def test_384_well_plate_row_orientation(self):
        p = plan_fixed_grid(16, 24, 3, orientation="rows")
        assert (p.v, p.s) == (16, 24)
        assert p.check_proportion == pytest.approx(0.1875)
        assert p.test_line_capacity == 312

    def test_auto_orientation_takes_longer_side(self):
        p = plan_fixed_grid(16, 24, 3)
        assert (p.v, p.s) == (24, 16)

    def test_infeasible_grid(self):
        with pytest.raises(InfeasibleParametersError):
            plan_fixed_grid(4, 2, 2)

    def test_too_many_checks(self):
        with pytest.raises(InfeasibleParametersError):
            plan_fixed_grid(4, 3, 5, orientation="rows")


class TestPlanSerialization:
    def test_json_fields(self):
        import json

        d = json.loads(plan(4, 0.2, 173).to_json())
        assert d["v"] == 20 and d["s"] == 11 and d["k"] == 4
        assert d["surplus"] == 3
        assert d["feasibleDf"] == feasibility_df(20, 11, 4)
