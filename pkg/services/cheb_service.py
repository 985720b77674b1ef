from fractions import Fraction
from functools import lru_cache
from math import comb

from core.exceptions import DomainError, ZeroPolynomialError
from core.logger import get_logger
from models.chebyshev import QForm
from models.polynomial import IntPolynomial

logger = get_logger("cheb")


@lru_cache(maxsize=None)
def cheb_poly(j: int) -> IntPolynomial:
    """T_j in monomial form: T_0 = 1, T_1 = x, T_{j+1} = 2x T_j - T_{j-1}."""
    if j < 0:
        raise DomainError(f"Chebyshev degree must be nonnegative, got {j}")
    if j == 0:
        return IntPolynomial((1,))
    if j == 1:
        return IntPolynomial((0, 1))
    return cheb_poly(j - 1).shift_up().scale(2) - cheb_poly(j - 2)


def build_q(p: IntPolynomial) -> QForm:
    """
    Q(w) = -2 sum_j a_j T_j(w), stored as the inner coefficients
    c_k = sum_j a_j b<j>_k. The constant term of p is zeroed first,
    which leaves every fractional part {P(θ^n)} unchanged.
    """
    if p.is_zero:
        raise ZeroPolynomialError("Cannot transform the zero polynomial")

    normalized = p[0] != 0
    if normalized:
        logger.info("constant term %d of %s set to 0", p[0], p)
        p_used = p.with_constant(0)
    else:
        p_used = p

    inner = IntPolynomial(())
    for j, a in enumerate(p_used.coeffs):
        if a:
            inner = inner + cheb_poly(j).scale(a)

    return QForm(c=inner.coeffs, m=p.degree, source=p, a0_normalized=normalized)


def power_to_cheb(m: int) -> list[Fraction]:
    """
    x^m = 2^(1-m) sum'_k C(m, k) T_{m-2k}; entry j of the result is the
    coefficient of T_j. For even m the k = m/2 term is halved.
    """
    if m < 1:
        raise DomainError(f"Power must be positive, got {m}")

    coeffs = [Fraction(0)] * (m + 1)
    scale = Fraction(1, 2 ** (m - 1))
    for k in range(m // 2 + 1):
        term = Fraction(comb(m, k))
        if 2 * k == m:
            term /= 2
        coeffs[m - 2 * k] += scale * term
    return coeffs


def binomial_poly(m: int) -> IntPolynomial:
    """
    The integer P with build_q(P) = -2^m x^m (up to an integer constant for even m).
    """
    if m < 1:
        raise DomainError(f"Power must be positive, got {m}")

    coeffs = [0] * (m + 1)
    for k in range((m + 1) // 2):
        coeffs[m - 2 * k] = comb(m, k)

    if m % 2 == 0:
        central = comb(m, m // 2)
        if central % 2 == 0:
            coeffs[0] = central // 2
        else:
            logger.warning("½C(%d, %d) is not an integer; constant dropped", m, m // 2)

    return IntPolynomial(tuple(coeffs))
