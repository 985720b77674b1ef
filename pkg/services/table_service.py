import numpy as np

from core.exceptions import TableMismatch
from core.logger import get_logger
from models.polynomial import IntPolynomial
from models.table import ShapeTableRow
from services.closed_form_service import cubic_criticals
from services.cheb_service import build_q
from services.density_service import make_model
from services.shape_service import shape_classify

logger = get_logger("table")

# printed numbers carry two decimals
TABLE_TOL = 0.01

EXPECTED_ROWS = (
    ShapeTableRow((1, 1, 1), -0.61, 0.27, -0.11, 2.63, (0, .89, 1), (0, .63, 1), (), "∪⌣∪"),
    ShapeTableRow((3, 5, 6), -0.68, 0.12, 4.22, 10.39, (0, .22, 1), (0, .39, 1), (), "⌊∪⌋"),
    ShapeTableRow((3, 3, 10), -0.17, -0.17, 6.11, 6.11, (0, 1), (0, 1), (.11,), "∪∪"),
    ShapeTableRow((1, -1, -2), -0.5, 0.83, -5, 4.48, (0, 1), (0, .48, 1), (), "∪⌋"),
    ShapeTableRow((1, 2, 3), -0.67, 0, 2.82, 4, (0, .82, 1), (0, 1), (), "⌊∪"),
    ShapeTableRow((1, -2, -2), -0.39, 1.06, -6.21, None, (.79,), (0, 1), (), "⌣∪"),
    ShapeTableRow((1, 2, -2), -1.06, 0.39, None, 6.21, (0, 1), (.21,), (), "∪⌣"),
    ShapeTableRow((1, 0, 0), -0.5, 0.5, -2, 2, (0, 1), (0, 1), (), "∪"),
    ShapeTableRow((1, 1, 4), None, None, None, None, (0, 1), (0, 1), (), "∪"),
)


def cubic_poly(a3: int, a2: int, a1: int) -> IntPolynomial:
    return IntPolynomial((0, a1, a2, a3))


def reproduce_row(a3: int, a2: int, a1: int) -> ShapeTableRow:
    p = cubic_poly(a3, a2, a1)
    q = build_q(p)
    coeffs = q.poly.descending_floats()

    def q_at(x):
        if x is None or abs(x) > 1.0:
            return None
        return float(np.polyval(coeffs, x))

    crit = cubic_criticals(a3, a2, a1)
    x1, x2 = crit if crit else (None, None)

    report = shape_classify(make_model(p))
    return ShapeTableRow(
        coeffs=(a3, a2, a1),
        x1=x1,
        x2=x2,
        q1=q_at(x1),
        q2=q_at(x2),
        A=report.A,
        B=report.B,
        S=report.S,
        shape=report.shape,
    )


def reproduce_table() -> list[ShapeTableRow]:
    return [reproduce_row(*row.coeffs) for row in EXPECTED_ROWS]


# ---------------- COMPARISON ----------------

def _close(got, want) -> bool:
    if got is None or want is None:
        return got is None and want is None
    return abs(got - want) <= TABLE_TOL


def _close_sets(got, want) -> bool:
    return len(got) == len(want) and all(_close(g, w) for g, w in zip(sorted(got), sorted(want)))


def row_mismatches(got: ShapeTableRow, want: ShapeTableRow) -> list[str]:
    problems = []
    for name in ("x1", "x2", "q1", "q2"):
        if not _close(getattr(got, name), getattr(want, name)):
            problems.append(f"{name}: {getattr(got, name)} != {getattr(want, name)}")
    for name in ("A", "B", "S"):
        if not _close_sets(getattr(got, name), getattr(want, name)):
            problems.append(f"{name}: {getattr(got, name)} != {getattr(want, name)}")
    if got.shape != want.shape:
        problems.append(f"shape: {got.shape} != {want.shape}")
    return problems


def table_problems(rows: list[ShapeTableRow]) -> list[str]:
    problems = []
    for got, want in zip(rows, EXPECTED_ROWS):
        problems.extend(f"{want.coeffs}: {issue}" for issue in row_mismatches(got, want))
    return problems


def check_table(rows: list[ShapeTableRow] = None) -> list[ShapeTableRow]:
    """Reproduce every row and raise TableMismatch listing all differences."""
    rows = rows if rows is not None else reproduce_table()

    problems = table_problems(rows)
    if problems:
        logger.error("table mismatch: %s", "; ".join(problems))
        raise TableMismatch("; ".join(problems))
    return rows


# ---------------- FORMAT ----------------

def _num(x) -> str:
    return "" if x is None else f"{x:.2f}"


def _set(values) -> str:
    return "{" + ",".join(f"{v:.2f}" for v in values) + "}" if values else "∅"


def format_row(row: ShapeTableRow) -> dict:
    not_real = row.x1 is None
    return {
        "coeffs": ",".join(str(c) for c in row.coeffs),
        "x1": "∉R" if not_real else _num(row.x1),
        "x2": "∉R" if not_real else _num(row.x2),
        "q1": _num(row.q1),
        "q2": _num(row.q2),
        "A": _set(row.A),
        "B": _set(row.B),
        "S": _set(row.S),
        "shape": row.shape,
    }
