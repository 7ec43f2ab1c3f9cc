"""End-to-end tests for sweeps, refinement and compute_vn."""

import math
from dataclasses import replace

import numpy as np
import pytest

from cosbound.common.config import Settings
from cosbound.common.exceptions import CertificationFailed, DomainError
from cosbound.core.records import SUBPROBLEM_COLUMNS
from cosbound.core.trigpoly import membership_c_n, v_functional
from cosbound.extremal import pipeline
from cosbound.extremal.bounds import DEFAULT_LINES
from cosbound.extremal.pipeline import (
    bound_violations,
    compute_vn,
    refine,
    sweep,
    sweep_subproblems,
    upper_bound_for,
)
from cosbound.extremal.results import SweepRecord
from cosbound.extremal.witnesses import COEFFS_V4, PUBLISHED_CONSTANTS


V4_INTERVAL = (1.5597515, math.sqrt(3))


def _check_result(result):
    assert membership_c_n(result.witness, 1e-6).in_class
    assert v_functional(result.witness) == pytest.approx(result.v_value, abs=1e-6)
    lo, hi = result.interval
    assert lo <= result.a_star <= hi


class TestSweep:
    def test_coarse_grid_brackets_minimum(self, fast_settings):
        records = sweep(4, V4_INTERVAL, 101, fast_settings)
        assert len(records) == 101
        assert [r.a for r in records] == sorted(r.a for r in records)
        best = min((r for r in records if r.certified), key=lambda r: r.ratio)
        spacing = (V4_INTERVAL[1] - V4_INTERVAL[0]) / 100
        # grid points miss a* by up to half a spacing; the curvature there costs about 2e-4
        assert 34.8992259 - 1e-6 <= best.ratio <= 34.8992259 + 5e-4
        assert abs(best.a - 1.7051159) <= spacing

    def test_records_are_consistent(self, fast_settings):
        for record in sweep(5, (1.6456659, 1.75), 11, fast_settings):
            if record.outcome is not None:
                assert record.multipliers_valid == record.outcome.multipliers_valid
            assert record.ratio * (math.sqrt(record.a) - 1) ** 2 == pytest.approx(record.chi, rel=1e-12)
            for line in DEFAULT_LINES:
                assert record.chi >= line.A * record.a - line.B - 1e-6

    def test_negative_multipliers_are_flagged(self, fast_settings, monkeypatch):
        solve = pipeline.chi_reduced

        def negated(problem, *args):
            chi, outcome, sid = solve(problem, *args)
            u = {j: -1.0 for j in outcome.multipliers.u}
            return chi, replace(outcome, multipliers=replace(outcome.multipliers, u=u)), sid

        monkeypatch.setattr(pipeline, "chi_reduced", negated)
        records = sweep(5, (1.6456659, 1.75), 2, fast_settings)
        assert [r.multipliers_valid for r in records] == [False, False]

    def test_two_points(self, fast_settings):
        assert len(sweep(4, V4_INTERVAL, 2, fast_settings)) == 2

    def test_parallel_matches_grid(self, fast_settings):
        serial = sweep(4, V4_INTERVAL, 5, fast_settings)
        parallel = sweep(4, V4_INTERVAL, 5, replace(fast_settings, jobs=2))
        for s, p in zip(serial, parallel):
            assert s.a == p.a
            assert s.chi == pytest.approx(p.chi, abs=1e-8)

    def test_bad_interval(self, fast_settings):
        with pytest.raises(DomainError):
            sweep(4, (1.5, 1.9), 11, fast_settings)
        with pytest.raises(DomainError):
            sweep(4, V4_INTERVAL, 1, fast_settings)

    def test_subproblem_tables(self, fast_settings):
        tables = sweep_subproblems(6, (1.6456659, 1.8231801), 3, fast_settings)
        assert list(tables) == ["{}", "{4}", "{5}", "{4,5}"]
        for rows in tables.values():
            assert len(rows) == 3
            assert list(rows[0]) == SUBPROBLEM_COLUMNS
        assert all(row["converged"] for row in tables["{}"])
        assert [row["subproblem"] for row in tables["{4,5}"]] == [3, 3, 3]


class TestBoundViolations:
    def test_flags_records_below_a_line(self):
        # at a = 1.7 the lines give 2.4, 3.1109 and 2.2488
        records = [SweepRecord(1.6, 3.5, 1.0, 0, True), SweepRecord(1.7, 2.5, 1.0, 0, False)]
        violations = bound_violations(records)
        assert [(v[0], v[1]) for v in violations] == [(1.7, "F2")]
        assert violations[0][2] == pytest.approx(2.5 - (5.8726781 * 1.7 - 6.8726781))

    def test_skips_gaps(self):
        assert bound_violations([SweepRecord(1.7, math.inf, math.inf, -1, False)]) == []


class TestRefine:
    def test_degree_four(self, fast_settings):
        records = sweep(4, (1.69, 1.72), 31, fast_settings)
        a_star, ratio, outcome = refine(4, records, settings=fast_settings)
        assert a_star == pytest.approx(1.7051159, abs=1e-4)
        assert ratio == pytest.approx(34.8992259, abs=1e-5)
        assert outcome.converged

    def test_flat_bracket_keeps_grid_point(self, fast_settings):
        records = sweep(4, (1.70, 1.71), 3, fast_settings)
        a_star, ratio, _ = refine(4, records, bracket_halfwidth=1e-9, settings=fast_settings)
        best = min((r for r in records if r.certified), key=lambda r: (r.ratio, r.a))
        assert a_star == best.a
        assert ratio == best.ratio

    def test_nothing_certified(self):
        with pytest.raises(CertificationFailed):
            refine(4, [SweepRecord(1.7, math.inf, math.inf, -1, False)])


class TestComputeVn:
    def test_v2(self):
        result = compute_vn(2)
        assert result.v_value == pytest.approx(53.1390720, abs=1e-6)
        assert result.seed == 42

    def test_v3(self):
        assert compute_vn(3).v_value == pytest.approx(36.9199911, abs=1e-6)

    def test_v4(self, fast_settings):
        result = compute_vn(4, fast_settings)
        assert result.v_value == pytest.approx(34.8992259, abs=1e-5)
        assert result.witness.as_array() / result.witness[0] == pytest.approx(COEFFS_V4, abs=1e-4)
        assert result.interval[0] == pytest.approx(1.5597515, abs=1e-6)
        _check_result(result)

    def test_v5(self, fast_settings):
        result = compute_vn(5, fast_settings)
        assert result.v_value == pytest.approx(34.8992259, abs=1e-5)
        _check_result(result)

    def test_v6(self, fast_settings):
        result = compute_vn(6, fast_settings)
        assert result.v_value == pytest.approx(34.8992259, abs=1e-5)
        coeffs = result.witness.as_array() / result.witness[0]
        assert coeffs == pytest.approx(COEFFS_V4 + (0.0, 0.0), abs=1e-4)
        _check_result(result)

    @pytest.mark.slow
    def test_v7(self):
        result = compute_vn(7, Settings(grid=501, strict_paper_bounds=True))
        coeffs = result.witness.as_array() / result.witness[0]
        assert result.v_value == pytest.approx(34.6494874, abs=1e-5)
        assert coeffs[7] == pytest.approx(0.0035595, abs=1e-4)
        assert coeffs[5] == pytest.approx(0.0, abs=1e-5)
        assert coeffs[6] == pytest.approx(0.0, abs=1e-5)
        _check_result(result)

    @pytest.mark.slow
    def test_v8(self):
        result = compute_vn(8, Settings(grid=501, strict_paper_bounds=True))
        coeffs = result.witness.as_array() / result.witness[0]
        assert result.v_value == pytest.approx(34.5399155, abs=1e-5)
        assert result.a_star == pytest.approx(1.7312576, abs=1e-4)
        assert coeffs[7] == pytest.approx(0.0084774, abs=1e-4)
        assert coeffs[8] == pytest.approx(0.0039758, abs=1e-4)
        _check_result(result)

    @pytest.mark.slow
    def test_monotone_chain(self):
        settings = Settings(grid=501)
        values = [compute_vn(n, settings).v_value for n in range(2, 9)]
        v2, v3, v4, v5, v6, v7, v8 = values
        assert v2 - v3 > 1e-3 and v3 - v4 > 1e-3
        assert v4 == pytest.approx(v5, abs=1e-6) and v5 == pytest.approx(v6, abs=1e-6)
        assert v6 - v7 > 1e-3 and v7 - v8 > 1e-3

    def test_memoized(self, fast_settings):
        assert compute_vn(4, fast_settings) is compute_vn(4, fast_settings)

    def test_json_record_is_stable(self, fast_settings):
        record = compute_vn(4, fast_settings).to_record()
        assert list(record)[:9] == [
            "n", "interval", "v", "a_star", "witness_coeffs",
            "witness_factor", "certified", "grid_points", "seed",
        ]
        assert "runtime" not in record
        assert record["grid_points"] == 101
        # no kept inequalities at n = 4, so nothing is left inactive
        assert record["inequality_slack"] == math.inf

    def test_strict_upper_bound(self, fast_settings):
        assert upper_bound_for(6, fast_settings) == PUBLISHED_CONSTANTS[5]

    @pytest.mark.parametrize("n", [1, 9])
    def test_degree_range(self, n):
        with pytest.raises(DomainError):
            compute_vn(n)
