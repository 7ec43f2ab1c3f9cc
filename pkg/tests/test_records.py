"""Tests for the JSON and CSV record formats."""

import json

import numpy as np
import pytest

from cosbound.common.exceptions import DomainError
from cosbound.core.records import (
    SWEEP_COLUMNS,
    format_constant,
    parse_polynomial,
    polynomial_record,
    rows_to_csv,
    serialize_record,
    to_jsonable,
)


class TestFormatConstant:
    @pytest.mark.parametrize(
        "value, expected",
        [
            (34.89922589, "34.8992259"),
            (1.00000005, "1.0000000"),
            (1.00000015, "1.0000002"),
            (53.139072, "53.1390720"),
            (float("inf"), "inf"),
        ],
    )
    def test_seven_decimals_half_even(self, value, expected):
        assert format_constant(value) == expected


class TestJson:
    def test_numpy_values(self):
        data = to_jsonable({"x": np.array([1.0, 2.0]), "ok": np.bool_(True), "k": np.int64(3)})
        assert data == {"x": [1.0, 2.0], "ok": True, "k": 3}

    def test_infinity_becomes_null(self):
        assert json.loads(serialize_record({"v": float("inf")})) == {"v": None}

    def test_key_order_preserved(self):
        text = serialize_record({"n": 4, "interval": [1.5, 1.7], "v": 34.9})
        assert text.index('"n"') < text.index('"interval"') < text.index('"v"')
        assert text.endswith("}\n")


class TestPolynomialFile:
    def test_round_trip(self):
        degree, coeffs = parse_polynomial(json.dumps(polynomial_record([1.0, 1.5, 0.5])))
        assert degree == 2
        assert coeffs == [1.0, 1.5, 0.5]

    def test_degree_optional(self):
        assert parse_polynomial('{"coeffs": [1, 2]}') == (1, [1.0, 2.0])

    @pytest.mark.parametrize(
        "text",
        ["not json", "[1, 2]", '{"coeffs": []}', '{"coeffs": ["a"]}', '{"degree": 3, "coeffs": [1, 2]}'],
    )
    def test_rejects(self, text):
        with pytest.raises(DomainError):
            parse_polynomial(text)


class TestCsv:
    def test_layout(self, tmp_path):
        rows = [{"a": 1.5, "chi": 2.0 / 3.0, "ratio": 34.899225912345, "subproblem": 0, "certified": True}]
        path = tmp_path / "sweep.csv"
        text = rows_to_csv(rows, SWEEP_COLUMNS, str(path))
        assert text == "a,chi,ratio,subproblem,certified\n1.5,0.666666667,34.8992259,0,True\n"
        assert path.read_bytes() == text.encode()

    def test_header_without_rows(self):
        assert rows_to_csv([], SWEEP_COLUMNS) == "a,chi,ratio,subproblem,certified\n"
