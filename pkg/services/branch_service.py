from fractions import Fraction

import numpy as np
from mpmath import mp

from core.config import DEFAULT_PRECISION_BITS
from core.exceptions import DomainError, OutOfRange
from models.branch import Branch, CriticalPartition
from models.chebyshev import QForm
from services.poly_service import isolate_real_roots, root_to_mpf, side_of

# float bisection halves an interval of width <= 2 below 1e-19
_BISECT_STEPS = 64
# Newton polish is skipped where |Q'| is below this
_NEWTON_MIN_SLOPE = 1e-6


def _require_nonconstant(q: QForm):
    if q.m < 1 or q.inner.degree < 1:
        raise DomainError("Q is constant; there are no branches")


def critical_partition(q: QForm, bits: int = DEFAULT_PRECISION_BITS) -> CriticalPartition:
    """
    Interior points are the odd-multiplicity roots of Q' in (-1, 1),
    isolated exactly and refined to `bits`. Even-multiplicity roots are
    reported separately as stationary points.
    """
    _require_nonconstant(q)
    dq = q.inner.derivative()

    interior, stationary = [], []
    for root in isolate_real_roots(dq):
        lo_side, root = side_of(root, Fraction(-1))
        hi_side, root = side_of(root, Fraction(1))
        if lo_side != 1 or hi_side != -1:
            continue

        value = root_to_mpf(root, bits)
        if root.multiplicity % 2:
            interior.append(value)
        else:
            stationary.append(value)

    with mp.workprec(bits):
        points = (mp.mpf(-1),) + tuple(interior) + (mp.mpf(1),)
    return CriticalPartition(points=points, stationary=tuple(stationary))


def branches(q: QForm, bits: int = DEFAULT_PRECISION_BITS) -> list[Branch]:
    partition = critical_partition(q, bits)
    pts = partition.points

    result = []
    with mp.workprec(bits):
        for k in range(1, len(pts)):
            lo, hi = pts[k - 1], pts[k]
            q_lo = mp.mpf(q(-1)) if k == 1 else q(lo)
            q_hi = mp.mpf(q(1)) if k == len(pts) - 1 else q(hi)
            increasing = q_hi > q_lo
            result.append(
                Branch(
                    k=k,
                    x_lo=lo,
                    x_hi=hi,
                    alpha=min(q_lo, q_hi),
                    beta=max(q_lo, q_hi),
                    increasing=bool(increasing),
                )
            )
    return result


# ---------------- INVERSION ----------------

def invert_many(b: Branch, q: QForm, ys: np.ndarray) -> np.ndarray:
    """
    Vectorized inverse of Q on the branch: bracketed bisection to float
    resolution, then one guarded Newton step. ys must lie in [alpha, beta].
    """
    ys = np.asarray(ys, dtype=np.float64)
    coeffs = q.poly.descending_floats()
    dcoeffs = q.derivative.descending_floats()
    lo, hi = b.lo_f, b.hi_f
    sgn = 1.0 if b.increasing else -1.0

    a = np.full(ys.shape, lo)
    c = np.full(ys.shape, hi)
    for _ in range(_BISECT_STEPS):
        mid = 0.5 * (a + c)
        below = sgn * (np.polyval(coeffs, mid) - ys) < 0
        a = np.where(below, mid, a)
        c = np.where(below, c, mid)
    x = 0.5 * (a + c)

    resid = np.polyval(coeffs, x) - ys
    slope = np.polyval(dcoeffs, x) if dcoeffs else np.zeros_like(x)
    safe = np.abs(slope) > _NEWTON_MIN_SLOPE
    step = np.where(safe, resid / np.where(safe, slope, 1.0), 0.0)
    polished = x - step
    better = (
        safe
        & (polished >= lo)
        & (polished <= hi)
        & (np.abs(np.polyval(coeffs, polished) - ys) < np.abs(resid))
    )
    return np.where(better, polished, x)


def invert_on_branch(b: Branch, q: QForm, y: float) -> float:
    if not (b.alpha_f <= y <= b.beta_f):
        raise OutOfRange(f"y={y} is outside [{b.alpha_f}, {b.beta_f}] of branch {b.k}")
    return float(invert_many(b, q, np.array([y]))[0])


def s_many(b: Branch, q: QForm, ys: np.ndarray) -> np.ndarray:
    """
    The extension S_k: clamp into [alpha, beta] and invert; the sign is
    flipped for increasing branches. Always in [-1, 1].
    """
    ys = np.asarray(ys, dtype=np.float64)
    clamped = np.clip(ys, b.alpha_f, b.beta_f)
    out = invert_many(b, q, clamped)

    # clamped ends map exactly to the branch endpoints
    at_alpha = ys <= b.alpha_f
    at_beta = ys >= b.beta_f
    alpha_x, beta_x = (b.lo_f, b.hi_f) if b.increasing else (b.hi_f, b.lo_f)
    out = np.where(at_alpha, alpha_x, np.where(at_beta, beta_x, out))

    if b.increasing:
        out = -out
    return np.clip(out, -1.0, 1.0)


def s_k(b: Branch, q: QForm, y: float) -> float:
    return float(s_many(b, q, np.array([y]))[0])
