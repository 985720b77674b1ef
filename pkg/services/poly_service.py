import re
from fractions import Fraction

import sympy as sp
from mpmath import mp
from sympy.parsing.sympy_parser import (
    convert_xor,
    implicit_multiplication_application,
    parse_expr,
    standard_transformations,
)

from core.exceptions import PolynomialParseError, ZeroPolynomialError
from core.logger import get_logger
from models.polynomial import X, IntPolynomial, RealRoot

logger = get_logger("poly")

_INT_TOKEN = re.compile(r"^[+-]?\d+$")
_NUMBER_TOKEN = re.compile(r"^[+-]?(\d+\.\d*|\.\d+|\d+/\d+|\d+(\.\d*)?[eE][+-]?\d+)$")
_MONOMIAL_CHARS = re.compile(r"^[0-9xX\s\^\*\+\-\(\)\./]+$")

_TRANSFORMS = standard_transformations + (implicit_multiplication_application, convert_xor)

# sympy's rational refinement is used up to this precision; beyond it Newton takes over
_EXACT_REFINE_LIMIT = 256


# ---------------- PARSING ----------------

def _parse_comma_list(text: str) -> IntPolynomial:
    coeffs = []
    for raw in text.split(","):
        token = raw.strip()
        if _INT_TOKEN.match(token):
            coeffs.append(int(token))
        elif _NUMBER_TOKEN.match(token):
            raise PolynomialParseError(f"Non-integer coefficient: {token!r}")
        else:
            raise PolynomialParseError(f"Malformed token: {token!r}")
    return IntPolynomial(tuple(coeffs))


def _parse_monomial_form(text: str) -> IntPolynomial:
    if not _MONOMIAL_CHARS.match(text):
        bad = sorted(set(ch for ch in text if not _MONOMIAL_CHARS.match(ch)))
        raise PolynomialParseError(f"Malformed token(s): {''.join(bad)!r}")

    try:
        expr = parse_expr(text.replace("X", "x"), local_dict={"x": X}, transformations=_TRANSFORMS)
        poly = sp.Poly(expr, X)
    except Exception as e:
        raise PolynomialParseError(f"Malformed polynomial {text!r}: {e}")

    coeffs = poly.all_coeffs()
    if any(not sp.sympify(c).is_integer for c in coeffs):
        raise PolynomialParseError(f"Non-integer coefficient in {text!r}")

    return IntPolynomial(tuple(int(c) for c in reversed(coeffs)))


def parse_poly(text: str) -> IntPolynomial:
    """
    Accepts either an ascending comma-separated list ("0,6,5,3")
    or a monomial form ("x^4-x^3-x^2-x+1").
    """
    if text is None or not text.strip():
        raise PolynomialParseError("Empty polynomial text")

    text = text.strip()
    if "," in text or _INT_TOKEN.match(text):
        p = _parse_comma_list(text)
    else:
        p = _parse_monomial_form(text)

    if p.is_zero:
        raise ZeroPolynomialError(f"Zero polynomial: {text!r}")
    return p


# ---------------- ROOT ISOLATION ----------------

def _to_fraction(r) -> Fraction:
    r = sp.Rational(r)
    return Fraction(int(r.p), int(r.q))


def refine_root(root: RealRoot, eps: Fraction) -> RealRoot:
    """Shrink the isolating interval below eps (exact, rational)."""
    if root.width <= eps:
        return root

    s, t = root.factor.to_sympy().refine_root(
        sp.Rational(root.lo.numerator, root.lo.denominator),
        sp.Rational(root.hi.numerator, root.hi.denominator),
        eps=sp.Rational(eps.numerator, eps.denominator),
    )
    return RealRoot(_to_fraction(s), _to_fraction(t), root.multiplicity, root.factor)


def _halve(root: RealRoot) -> RealRoot:
    return refine_root(root, root.width / 2)


def isolate_real_roots(p: IntPolynomial) -> list[RealRoot]:
    """
    Square-free factorization, then exact isolation of each factor.
    Returns pairwise disjoint intervals sorted left to right.
    """
    if p.is_zero:
        raise ZeroPolynomialError("Cannot isolate roots of the zero polynomial")

    _, factors = p.to_sympy().sqf_list()

    roots = []
    for factor, k in factors:
        f = IntPolynomial.from_sympy(factor)
        if f.degree < 1:
            continue
        for (lo, hi), _ in factor.intervals():
            roots.append(RealRoot(_to_fraction(lo), _to_fraction(hi), k, f))

    roots.sort(key=lambda r: (r.lo, r.hi))

    # intervals of different square-free factors may overlap; split them apart
    i = 0
    while i + 1 < len(roots):
        a, b = roots[i], roots[i + 1]
        if a.hi >= b.lo:
            roots[i], roots[i + 1] = _halve(a), _halve(b)
            roots.sort(key=lambda r: (r.lo, r.hi))
            i = max(i - 1, 0)
            continue
        i += 1

    return roots


def side_of(root: RealRoot, c: Fraction) -> tuple[int, RealRoot]:
    """
    Which side of c the root lies on (-1 left, +1 right, 0 when the root is c),
    refining the isolating interval as needed.
    """
    c = Fraction(c)
    if root.factor.sign_at(c) == 0:
        # c is a root of the factor; the interval isolates exactly one of them
        if root.lo <= c <= root.hi:
            return 0, root
        return (1 if root.lo > c else -1), root

    while root.lo <= c <= root.hi:
        root = _halve(root)
    return (1 if root.lo > c else -1), root


# ---------------- HIGH PRECISION ----------------

def _mpf_from_fraction(q: Fraction):
    return mp.mpf(q.numerator) / q.denominator


def dyadic(x) -> tuple[int, int]:
    """Signed (mantissa, exponent) of an mpf; mpf.man_exp drops the sign."""
    man, exp = x.man_exp
    return (-man if x < 0 else man), exp


def root_to_mpf(root: RealRoot, bits: int):
    """
    The root as an mpf correct to about `bits` bits.
    Rational bisection for moderate precision, Newton doubling beyond,
    certified by an exact sign change on a dyadic bracket.
    """
    if root.lo == root.hi:
        with mp.workprec(bits + 16):
            return +_mpf_from_fraction(root.lo)

    if bits <= _EXACT_REFINE_LIMIT:
        fine = refine_root(root, Fraction(1, 2 ** (bits + 4)))
        with mp.workprec(bits + 16):
            return +_mpf_from_fraction(fine.midpoint)

    f = root.factor
    df = f.derivative()
    seed = refine_root(root, Fraction(1, 2 ** 72))

    prec = 64
    with mp.workprec(prec + 16):
        x = _mpf_from_fraction(seed.midpoint)

    while prec < bits + 16:
        prec = min(2 * prec, bits + 16)
        with mp.workprec(prec + 16):
            x = x - f(x) / df(x)

    with mp.workprec(bits + 32):
        delta = mp.ldexp(1, -bits)
        lo, hi = x - delta, x + delta
        s_lo = f.sign_at_dyadic(*dyadic(lo))
        s_hi = f.sign_at_dyadic(*dyadic(hi))

    if s_lo * s_hi > 0:
        logger.warning("Newton refinement failed certification at %d bits; bisecting", bits)
        fine = refine_root(root, Fraction(1, 2 ** (bits + 4)))
        with mp.workprec(bits + 16):
            return +_mpf_from_fraction(fine.midpoint)

    with mp.workprec(bits + 16):
        return +x
