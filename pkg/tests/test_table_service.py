from dataclasses import replace

import pytest

from core.exceptions import TableMismatch
from services.table_service import (
    EXPECTED_ROWS,
    check_table,
    format_row,
    reproduce_row,
    reproduce_table,
    row_mismatches,
    table_problems,
)


@pytest.fixture(scope="module")
def rows():
    return reproduce_table()


def test_every_row_reproduces(rows):
    assert table_problems(rows) == []
    assert check_table(rows) is rows


@pytest.mark.parametrize("want", EXPECTED_ROWS, ids=lambda r: ",".join(map(str, r.coeffs)))
def test_row(want):
    got = reproduce_row(*want.coeffs)
    assert row_mismatches(got, want) == []
    assert got.shape == want.shape


def test_critical_values_outside_interval_are_missing(rows):
    by_coeffs = {r.coeffs: r for r in rows}
    assert by_coeffs[(1, -2, -2)].q2 is None
    assert by_coeffs[(1, 2, -2)].q1 is None
    assert by_coeffs[(1, 1, 4)].x1 is None


def test_mismatch_is_reported(rows):
    broken = list(rows)
    broken[0] = replace(broken[0], shape="∪", B=(0.0, 0.5, 1.0))
    problems = table_problems(broken)
    assert len(problems) == 2
    assert all(p.startswith("(1, 1, 1)") for p in problems)

    with pytest.raises(TableMismatch):
        check_table(broken)


def test_small_differences_are_tolerated(rows):
    nudged = replace(rows[1], x1=rows[1].x1 + 0.004)
    assert row_mismatches(nudged, EXPECTED_ROWS[1]) == []


def test_format_row():
    out = format_row(EXPECTED_ROWS[0])
    assert list(out) == ["coeffs", "x1", "x2", "q1", "q2", "A", "B", "S", "shape"]
    assert out["coeffs"] == "1,1,1"
    assert out["x1"] == "-0.61"
    assert out["A"] == "{0.00,0.89,1.00}"
    assert out["S"] == "∅"


def test_format_row_without_real_criticals():
    out = format_row(EXPECTED_ROWS[-1])
    assert out["x1"] == "∉R" and out["x2"] == "∉R"
    assert out["q1"] == ""
