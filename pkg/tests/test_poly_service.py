from fractions import Fraction

import pytest
import sympy as sp
from mpmath import mp

from core.exceptions import PolynomialParseError, ZeroPolynomialError
from models.polynomial import X, IntPolynomial
from services import poly_service
from services.poly_service import dyadic, isolate_real_roots, parse_poly, root_to_mpf, side_of

from conftest import poly


# ---------------- PARSING ----------------

def test_parse_comma_list_is_ascending():
    assert parse_poly("0,1") == poly(0, 1)
    assert parse_poly("0,6,5,3") == poly(0, 6, 5, 3)


def test_parse_monomial_form():
    assert parse_poly("x^4-x^3-x^2-x+1").coeffs == (1, -1, -1, -1, 1)
    assert parse_poly("3x^3 + 5x^2 + 6x") == poly(0, 6, 5, 3)
    assert parse_poly("2*x**2 - 1") == poly(-1, 0, 2)


def test_parse_single_integer_is_constant():
    assert parse_poly("7") == poly(7)


@pytest.mark.parametrize("text", ["0,1.5", "1/2,1", "x^2 + 0.5x"])
def test_parse_rejects_non_integer_coefficients(text):
    with pytest.raises(PolynomialParseError):
        parse_poly(text)


@pytest.mark.parametrize("text", ["0,a", "x^2 + y", "", "   ", "1,,2"])
def test_parse_rejects_malformed_text(text):
    with pytest.raises(PolynomialParseError):
        parse_poly(text)


def test_parse_rejects_zero_polynomial():
    with pytest.raises(ZeroPolynomialError):
        parse_poly("0,0,0")


def test_str_round_trips_through_parser():
    p = poly(1, -1, -1, -1, 1)
    assert str(p) == "x^4-x^3-x^2-x+1"
    assert parse_poly(str(p)) == p


def test_trailing_zeros_are_stripped():
    assert IntPolynomial((0, 1, 0, 0)).degree == 1


# ---------------- ROOTS ----------------

def test_isolates_both_surds_of_x2_minus_2():
    roots = isolate_real_roots(poly(-2, 0, 1))
    assert len(roots) == 2
    neg, pos = roots
    assert neg.hi < 0 < pos.lo
    assert float(root_to_mpf(neg, 64)) == pytest.approx(-(2 ** 0.5), abs=1e-15)
    assert float(root_to_mpf(pos, 64)) == pytest.approx(2 ** 0.5, abs=1e-15)


def test_quartic_salem_polynomial_has_two_real_roots():
    roots = isolate_real_roots(poly(1, -1, -1, -1, 1))
    assert len(roots) == 2
    small, big = roots
    assert side_of(small, Fraction(0))[0] == 1
    assert side_of(small, Fraction(1))[0] == -1
    assert side_of(big, Fraction(1))[0] == 1
    assert side_of(big, Fraction(2))[0] == -1


def test_no_real_roots():
    assert isolate_real_roots(poly(1, 0, 1)) == []


def test_multiplicities_survive_square_free_split():
    # (x - 1)^2 (x + 2)
    roots = isolate_real_roots(poly(2, -3, 0, 1))
    assert [r.multiplicity for r in roots] == [1, 2]


def test_side_of_reports_exact_hit():
    (root,) = isolate_real_roots(poly(-1, 2))
    side, _ = side_of(root, Fraction(1, 2))
    assert side == 0


def test_high_precision_root_is_certified():
    big = isolate_real_roots(poly(1, -1, -1, -1, 1))[1]
    theta = root_to_mpf(big, 2000)
    with mp.workprec(2000):
        p = poly(1, -1, -1, -1, 1)
        assert abs(p(theta)) < mp.mpf(2) ** -1990


def test_isolating_intervals_are_disjoint_and_bracket_odd_roots():
    # (x^2 - 2)^3 (x^2 - 3)^2 (x^2 - 5)
    expr = (X ** 2 - 2) ** 3 * (X ** 2 - 3) ** 2 * (X ** 2 - 5)
    p = IntPolynomial.from_sympy(sp.Poly(sp.expand(expr), X))
    roots = isolate_real_roots(p)

    assert len(roots) == 6
    for a, b in zip(roots, roots[1:]):
        assert a.hi < b.lo

    for r in roots:
        change = p.sign_at(r.lo) * p.sign_at(r.hi)
        assert change == (-1 if r.multiplicity % 2 else 1)


# ---------------- CERTIFIED REFINEMENT ----------------

def test_dyadic_keeps_the_sign():
    assert IntPolynomial((3, 2)).sign_at_dyadic(*dyadic(mp.mpf(-1.5))) == 0
    assert IntPolynomial((3, 2)).sign_at_dyadic(*dyadic(mp.mpf(1.5))) == 1
    assert IntPolynomial((0, 1)).sign_at_dyadic(*dyadic(mp.mpf(-0.25))) == -1


def test_negative_root_refines_without_bisection(monkeypatch):
    # trace polynomial of x^4-x^3-x^2-x+1; the root (1 - sqrt 13)/2 gives the quartic's ω
    trace = poly(-3, -1, 1)
    neg = isolate_real_roots(trace)[0]

    widths = []
    refine = poly_service.refine_root

    def recording(root, eps):
        widths.append(eps)
        return refine(root, eps)

    monkeypatch.setattr(poly_service, "refine_root", recording)

    bits = 1200
    y = root_to_mpf(neg, bits)

    assert min(widths) >= Fraction(1, 2 ** 72)
    with mp.workprec(bits + 32):
        assert y < 0
        assert abs(y - (1 - mp.sqrt(13)) / 2) < mp.mpf(2) ** (-bits + 2)
