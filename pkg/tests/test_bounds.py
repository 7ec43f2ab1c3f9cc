"""Tests for bound lines, functionals and interval restriction."""

import math

import pytest

from cosbound.common.exceptions import DomainError, NoRestriction
from cosbound.extremal.bounds import (
    DEFAULT_LINES,
    FUNCTIONAL_ONE,
    FUNCTIONAL_TWO,
    LINE_ONE,
    LINE_THREE,
    LINE_TWO,
    BoundLine,
    bound_line_eval,
    bound_line_stationary,
    functional_s,
    lower_envelope,
    restrict_interval,
    restrict_interval_report,
    verify_functional,
    verify_functionals,
)


class TestBoundLines:
    @pytest.mark.parametrize(
        "line, a, expected",
        [
            (LINE_ONE, 1.5275169, 36.9199978),
            (LINE_ONE, 1.5542038, 34.6494937),
            (LINE_THREE, 1.8191095, 34.6494933),
        ],
    )
    def test_proof_values(self, line, a, expected):
        assert bound_line_eval(line, a) == pytest.approx(expected, abs=1e-6)

    def test_second_line_at_lower_end(self):
        # typeset value 34.8992261 was computed from an unrounded line
        assert bound_line_eval(LINE_TWO, 1.6456659) == pytest.approx(34.8992261, abs=5e-6)
        assert bound_line_eval(LINE_TWO, 1.6456659) > 34.8992259

    def test_third_line_excludes_beyond_upper_end(self):
        assert bound_line_eval(LINE_THREE, 1.8231802) > 34.8992259

    def test_stationary_points(self):
        # (B / A)^2 of the rounded line is 1.3695554, not the typeset 1.3695543
        assert bound_line_stationary(LINE_TWO) == pytest.approx((6.8726781 / 5.8726781) ** 2)
        assert bound_line_stationary(LINE_TWO) == pytest.approx(1.3695554, abs=1e-7)
        assert bound_line_stationary(LINE_THREE) == pytest.approx((25.8011608 / 16.5) ** 2)
        assert bound_line_stationary(LINE_ONE) is None

    def test_domain(self):
        with pytest.raises(DomainError):
            bound_line_eval(LINE_ONE, 1.0)
        with pytest.raises(DomainError):
            BoundLine(0.0, 1.0)

    def test_lower_envelope_is_max(self):
        a = 1.7
        assert lower_envelope(a) == max(bound_line_eval(line, a) for line in DEFAULT_LINES)


class TestRestrictInterval:
    def test_degree_four(self):
        lo, hi = restrict_interval(4, 36.9199911)
        assert lo == pytest.approx(1.5597515, abs=1e-6)
        assert hi == pytest.approx(math.sqrt(3), abs=1e-12)

    def test_degree_six(self):
        lo, hi = restrict_interval(6, 34.8992259)
        assert lo == pytest.approx(1.6456659, abs=1e-6)
        assert hi == pytest.approx(1.8231801, abs=1e-6)

    def test_degree_eight(self):
        lo, hi = restrict_interval(8, 34.6494874)
        assert lo == pytest.approx(1.6566924, abs=1e-6)
        assert hi == pytest.approx(1.8191095, abs=1e-6)

    def test_endpoints_sit_on_tightest_line(self):
        report = restrict_interval_report(8, 34.6494874)
        assert bound_line_eval(LINE_TWO, report.a_lo) == pytest.approx(34.6494874, abs=1e-5)
        assert bound_line_eval(LINE_THREE, report.a_hi) == pytest.approx(34.6494874, abs=1e-5)
        names = {name for name, _, _ in report.excluded}
        assert {"F1", "F2", "F3"} <= names

    def test_rounding_keeps_interval_conservative(self):
        report = restrict_interval_report(6, 34.8992259)
        assert bound_line_eval(LINE_TWO, report.a_lo) <= 34.8992259 + 1e-5
        assert report.a_lo == round(report.a_lo, 7)
        assert report.a_hi == round(report.a_hi, 7)

    def test_no_restriction(self):
        with pytest.raises(NoRestriction) as info:
            restrict_interval(4, 1e6, lines=(LINE_THREE,))
        assert info.value.interval[1] == pytest.approx(math.sqrt(3))

    def test_not_an_upper_bound(self):
        with pytest.raises(DomainError):
            restrict_interval(4, 1.0)

    @pytest.mark.parametrize("n", [3, 9])
    def test_degree_range(self, n):
        with pytest.raises(DomainError):
            restrict_interval(n, 40.0)


class TestFunctionals:
    def test_functional_two_constant(self):
        assert functional_s(FUNCTIONAL_TWO, 0) == pytest.approx(25.8011608, abs=1e-5)

    def test_functional_one_constant(self):
        assert functional_s(FUNCTIONAL_ONE, 0) == pytest.approx(6.8726781, abs=1e-5)

    def test_functional_one_first(self):
        assert functional_s(FUNCTIONAL_ONE, 1) == pytest.approx(-4.8726781, abs=1e-5)

    @pytest.mark.parametrize(
        "fn, line", [(FUNCTIONAL_ONE, LINE_TWO), (FUNCTIONAL_TWO, LINE_THREE)]
    )
    def test_implied_lines(self, fn, line):
        report = verify_functional(fn, 8)
        assert report.passed
        assert report.weight_nonnegative
        assert report.line.A == pytest.approx(line.A, abs=1e-5)
        assert report.line.B == pytest.approx(line.B, abs=1e-5)
        assert all(report.s_values[k] <= 1 + 1e-5 for k in range(2, 9))

    def test_all_published_lines_verify(self):
        reports = verify_functionals(8)
        assert [r.name for r in reports] == ["trivial", "cosine-weight", "linear-weight"]
        assert reports[0].line.A == pytest.approx(2.0)
        assert reports[0].line.B == pytest.approx(1.0)

    def test_degree_range(self):
        with pytest.raises(DomainError):
            verify_functional(FUNCTIONAL_ONE, 9)
