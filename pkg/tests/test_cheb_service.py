import math
import random
from fractions import Fraction

import pytest

from core.exceptions import DomainError, ZeroPolynomialError
from models.polynomial import IntPolynomial
from services.cheb_service import binomial_poly, build_q, cheb_poly, power_to_cheb

from conftest import cubic, poly


def test_chebyshev_basis():
    assert cheb_poly(0) == poly(1)
    assert cheb_poly(1) == poly(0, 1)
    assert cheb_poly(2) == poly(-1, 0, 2)
    assert cheb_poly(3) == poly(0, -3, 0, 4)


def test_chebyshev_identity_on_the_circle():
    rng = random.Random(7)
    for _ in range(20):
        t = rng.uniform(0, math.pi)
        for j in (3, 5, 8):
            assert cheb_poly(j)(math.cos(t)) == pytest.approx(math.cos(j * t), abs=1e-12)


def test_negative_degree_is_rejected():
    with pytest.raises(DomainError):
        cheb_poly(-1)


def test_linear_q():
    q = build_q(poly(0, 1))
    assert q.poly == poly(0, -2)
    assert not q.a0_normalized


@pytest.mark.parametrize("a2, a1", [(1, 0), (1, 1), (-1, 2), (2, 3)])
def test_quadratic_q(a2, a1):
    q = build_q(poly(0, a1, a2))
    assert q.poly == poly(2 * a2, -2 * a1, -4 * a2)


@pytest.mark.parametrize("a3, a2, a1", [(1, 1, 1), (3, 5, 6), (3, 3, 10), (1, -2, -2)])
def test_cubic_q(a3, a2, a1):
    q = build_q(cubic(a3, a2, a1))
    assert q.poly == poly(2 * a2, 6 * a3 - 2 * a1, -4 * a2, -8 * a3)


def test_constant_term_is_zeroed():
    q = build_q(poly(5, 1))
    assert q.a0_normalized
    assert q.poly == build_q(poly(0, 1)).poly
    assert q.source == poly(5, 1)


def test_zero_polynomial_has_no_q():
    with pytest.raises(ZeroPolynomialError):
        build_q(IntPolynomial(()))


def test_q_evaluates_with_the_factor_minus_two():
    q = build_q(cubic(1, 1, 1))
    assert q(1) == -6
    assert q(-1) == 2


def test_powers_in_chebyshev_basis():
    assert power_to_cheb(1) == [0, 1]
    assert power_to_cheb(2) == [Fraction(1, 2), 0, Fraction(1, 2)]
    assert power_to_cheb(3) == [0, Fraction(3, 4), 0, Fraction(1, 4)]


def test_power_expansion_reassembles_monomial():
    for m in range(1, 8):
        total = IntPolynomial(())
        coeffs = power_to_cheb(m)
        scale = 2 ** (m - 1)
        for j, c in enumerate(coeffs):
            total = total + cheb_poly(j).scale(int(c * scale))
        assert total == IntPolynomial((0,) * m + (1,)).scale(scale)


def test_binomial_polynomials():
    assert binomial_poly(1) == poly(0, 1)
    assert binomial_poly(3) == poly(0, 3, 0, 1)
    assert binomial_poly(2) == poly(1, 0, 1)
    assert binomial_poly(4) == poly(3, 0, 4, 0, 1)


@pytest.mark.parametrize("m", [1, 3, 5, 7])
def test_odd_binomial_gives_pure_power(m):
    q = build_q(binomial_poly(m))
    assert q.poly == IntPolynomial((0,) * m + (-(2 ** m),))


@pytest.mark.parametrize("m", [2, 4, 6, 8])
def test_even_binomial_up_to_integer_constant(m):
    q = build_q(binomial_poly(m))
    assert q.poly.with_constant(0) == IntPolynomial((0,) * m + (-(2 ** m),))
    assert q.poly[0] == math.comb(m, m // 2)


def _random_poly(rng: random.Random) -> IntPolynomial:
    d = rng.randint(1, 6)
    coeffs = [rng.randint(-5, 5) for _ in range(d)] + [rng.choice([-3, -2, -1, 1, 2, 3])]
    return IntPolynomial(tuple(coeffs))


def test_q_is_linear_in_p():
    rng = random.Random(11)
    for _ in range(40):
        p1, p2 = _random_poly(rng), _random_poly(rng)
        k = rng.choice([-4, -1, 2, 7])
        total = p1 + p2
        if total.with_constant(0).is_zero:
            continue
        assert build_q(total).poly == build_q(p1).poly + build_q(p2).poly
        assert build_q(p1.scale(k)).poly == build_q(p1).poly.scale(k)
