from fractions import Fraction
from functools import lru_cache

import sympy as sp
from mpmath import mp

from core.config import DEFAULT_PRECISION_BITS
from core.exceptions import DomainError, RejectionReason, SalemRejection, ZeroPolynomialError
from core.logger import get_logger
from models.polynomial import X, IntPolynomial
from models.salem import SalemNumber
from services.poly_service import isolate_real_roots, root_to_mpf, side_of

logger = get_logger("salem")

_Y = sp.Symbol("y")


# ---------------- TRACE POLYNOMIAL ----------------

@lru_cache(maxsize=None)
def dickson(k: int) -> IntPolynomial:
    """D_k(y) with x^k + x^-k = D_k(x + 1/x); D_0 = 2, D_1 = y."""
    if k == 0:
        return IntPolynomial((2,))
    if k == 1:
        return IntPolynomial((0, 1))
    return dickson(k - 1).shift_up() - dickson(k - 2)


def trace_polynomial(p: IntPolynomial) -> IntPolynomial:
    """
    R of degree t with p(x) = x^t R(x + 1/x), for a palindromic p of degree 2t.
    Real roots of R in (-2, 2) are the unit-circle conjugate pairs of p.
    """
    if p.degree % 2 or not p.is_palindromic:
        raise DomainError(f"{p} is not a palindromic polynomial of even degree")

    t = p.degree // 2
    r = IntPolynomial((p[t],))
    for k in range(1, t + 1):
        r = r + dickson(k).scale(p[t + k])
    return r


# ---------------- VERIFICATION ----------------

def _reject(reason: RejectionReason, detail: str):
    logger.info("rejected: %s (%s)", reason.value, detail)
    raise SalemRejection(reason, detail)


def _build(p: IntPolynomial, theta_root, trace_roots, bits: int) -> SalemNumber:
    theta = root_to_mpf(theta_root, bits)

    omegas = []
    for root in trace_roots:
        x = root_to_mpf(root, bits + 8)
        with mp.workprec(bits + 16):
            omegas.append(+(mp.acos(x / 2) / (2 * mp.pi)))
    omegas.sort()

    return SalemNumber(
        minpoly=p,
        theta=theta,
        theta_precision_bits=bits,
        omegas=tuple(omegas),
        theta_root=theta_root,
        trace_roots=tuple(trace_roots),
    )


def verify_salem(minpoly: IntPolynomial, bits: int = DEFAULT_PRECISION_BITS) -> SalemNumber:
    """
    Checks, in order: monic, even degree >= 4, reciprocal, irreducible, root pattern.
    The root pattern is decided exactly on the trace polynomial.
    """
    p = minpoly
    if p.is_zero:
        raise ZeroPolynomialError("The zero polynomial is not a minimal polynomial")

    if not p.is_monic:
        _reject(RejectionReason.NOT_MONIC, f"leading coefficient is {p.leading}")

    if p.degree < 4 or p.degree % 2:
        _reject(RejectionReason.ODD_OR_SMALL_DEGREE, f"degree {p.degree}")

    if not p.is_palindromic:
        _reject(RejectionReason.NOT_RECIPROCAL, f"coefficients {p.coeffs} are not palindromic")

    if not p.to_sympy().is_irreducible:
        _reject(RejectionReason.REDUCIBLE, f"{p} factors over the rationals")

    t = p.degree // 2

    # real roots of p: exactly θ > 1 and θ^-1 in (0, 1)
    real_roots = isolate_real_roots(p)
    if len(real_roots) != 2:
        _reject(RejectionReason.ROOT_PATTERN_MISMATCH, f"{len(real_roots)} real roots, expected 2")

    above, theta_root = side_of(real_roots[1], Fraction(1))
    below_zero, small_root = side_of(real_roots[0], Fraction(0))
    below_one, small_root = side_of(small_root, Fraction(1))
    if above != 1 or below_zero != 1 or below_one != -1:
        _reject(RejectionReason.ROOT_PATTERN_MISMATCH, "real roots are not θ > 1 and θ^-1 in (0, 1)")

    # remaining roots on the unit circle <=> t - 1 roots of R in (-2, 2)
    trace = trace_polynomial(p)
    inside, outside = [], 0
    for root in isolate_real_roots(trace):
        lo_side, root = side_of(root, Fraction(-2))
        hi_side, root = side_of(root, Fraction(2))
        if lo_side == 1 and hi_side == -1:
            inside.append(root)
        elif hi_side == 1:
            outside += 1
        else:
            _reject(RejectionReason.ROOT_PATTERN_MISMATCH, "negative real conjugate")

    if outside != 1 or len(inside) != t - 1:
        _reject(
            RejectionReason.ROOT_PATTERN_MISMATCH,
            f"{len(inside)} unit-circle pairs and {outside} roots beyond 2, expected {t - 1} and 1",
        )

    return _build(p, theta_root, inside, bits)


def refine_theta(s: SalemNumber, bits: int) -> SalemNumber:
    if bits < 32:
        raise DomainError("Refinement needs at least 32 bits")
    if bits <= s.theta_precision_bits:
        return s
    logger.debug("refining θ of %s to %d bits", s.minpoly, bits)
    return _build(s.minpoly, s.theta_root, s.trace_roots, bits)


# ---------------- POWERS ----------------

def salem_power_minpoly(s: SalemNumber, m: int) -> IntPolynomial:
    """
    Minimal polynomial of θ^m as Res_y(p(y), x - y^m) = ∏(x - r_i^m).
    θ^m is again Salem of the same degree, so the product is irreducible.
    """
    if m < 1:
        raise DomainError(f"Power must be positive, got {m}")
    if m == 1:
        return s.minpoly

    p_y = s.minpoly.to_sympy().as_expr().subs(X, _Y)
    res = sp.Poly(sp.resultant(p_y, X - _Y ** m, _Y), X)
    q = IntPolynomial.from_sympy(res)
    if q.leading < 0:
        q = -q
    return q
