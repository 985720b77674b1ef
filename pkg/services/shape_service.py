from fractions import Fraction
from math import floor

from core.config import SET_EPS
from core.exceptions import DomainError
from core.logger import get_logger
from models.density import DensityModel, QuadraticPrediction, ShapeReport
from services.density_service import asymptotes, dedupe, fractional

logger = get_logger("shape")

CUP = "∪"
LEFT_WALL = "⌊"
RIGHT_WALL = "⌋"
CAP = "⌣"


def _with_one(values: set) -> tuple[float, ...]:
    if 0.0 in values:
        values = values | {1.0}
    return dedupe(values)


def _member(v: float, values) -> bool:
    return any(abs(v - s) <= SET_EPS for s in values)


def _extrema(model: DensityModel):
    """
    Local minima and maxima of Q(cos t). The ends x = ±1 (t = π, 0) are
    extrema of the composition whatever Q' does there; the kind follows
    from the direction of the adjacent branch.
    """
    bs = model.branches
    minima, maxima = [], []

    first, last = bs[0], bs[-1]
    if first.increasing:
        minima.append(first.alpha)
    else:
        maxima.append(first.beta)

    for b in bs[:-1]:
        if b.increasing:
            maxima.append(b.beta)
        else:
            minima.append(b.alpha)

    if last.increasing:
        maxima.append(last.beta)
    else:
        minima.append(last.alpha)

    return minima, maxima


def _piece(left: float, right: float, A, B, S) -> str:
    in_a, in_b, in_s = _member(left, A), _member(left, B), _member(left, S)
    right_b_or_s = _member(right, B) or _member(right, S)

    if in_a or in_s:
        return CUP if right_b_or_s else LEFT_WALL
    if in_b:
        return RIGHT_WALL if right_b_or_s else CAP
    raise DomainError(f"partition point {left} is in none of A, B, S")


def shape_classify(model: DensityModel) -> ShapeReport:
    minima, maxima = _extrema(model)

    A = _with_one({fractional(v) for v in minima})
    B = _with_one({fractional(v) for v in maxima})
    S = _with_one({fractional(v) for v in model.stationary_values})

    partition = dedupe(set(A) | set(B) | set(S))
    shape = "".join(_piece(l, r, A, B, S) for l, r in zip(partition, partition[1:]))

    asym = asymptotes(model)
    logger.debug("shape %s for A=%s B=%s S=%s", shape, A, B, S)
    return ShapeReport(
        A=A,
        B=B,
        S=S,
        partition=partition,
        shape=shape,
        asymptotes_left=asym.left,
        asymptotes_right=asym.right,
    )


# ---------------- QUADRATIC ----------------

def quadratic_asymptote_test(a2: int, a1: int) -> QuadraticPrediction:
    """
    For P = a2 x² + a1 x: Q has one interior extremum at w = -a1/(4 a2)
    with value V = a1²/(4 a2) + 2 a2. It gives an interior asymptote
    iff |w| < 1, a1 != 0 and V is not an integer.
    """
    if a2 == 0:
        raise DomainError("a2 must be nonzero")

    V = Fraction(a1 * a1, 4 * a2) + 2 * a2
    holds = a1 != 0 and abs(Fraction(a1, 4 * a2)) < 1 and V.denominator != 1
    if not holds:
        return QuadraticPrediction(v=None, shape=CUP)

    v = V - floor(V)
    shape = CUP + CAP if a2 > 0 else CAP + CUP
    return QuadraticPrediction(v=v, shape=shape)
