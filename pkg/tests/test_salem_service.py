import pytest
from mpmath import mp

from core.exceptions import DomainError, RejectionReason, SalemRejection, ZeroPolynomialError
from models.polynomial import IntPolynomial
from services.poly_service import isolate_real_roots, parse_poly, root_to_mpf
from services.salem_service import (
    dickson,
    refine_theta,
    salem_power_minpoly,
    trace_polynomial,
    verify_salem,
)

from conftest import QUARTIC_THETA, SEXTIC_THETA, poly, quartic_omega


def test_quartic_fixture_is_salem(quartic):
    assert quartic.degree == 4
    assert quartic.t == 2
    assert float(quartic.theta) == pytest.approx(QUARTIC_THETA, abs=1e-15)
    assert len(quartic.omegas) == 1
    assert float(quartic.omegas[0]) == pytest.approx(quartic_omega(), abs=1e-14)


def test_sextic_fixture_is_salem(sextic):
    assert sextic.degree == 6
    assert len(sextic.omegas) == 2
    assert float(sextic.theta) == pytest.approx(SEXTIC_THETA, abs=1e-9)
    assert all(0 < float(w) < 0.5 for w in sextic.omegas)


@pytest.mark.parametrize(
    "text, reason",
    [
        ("2x^4-x^3-x^2-x+2", RejectionReason.NOT_MONIC),
        ("x^2-3x+1", RejectionReason.ODD_OR_SMALL_DEGREE),
        ("x^5-x^4-x^3+x^2+1", RejectionReason.ODD_OR_SMALL_DEGREE),
        ("x^4-2x^3+x^2-x+1", RejectionReason.NOT_RECIPROCAL),
        ("x^4+2x^2+1", RejectionReason.REDUCIBLE),
        # reciprocal and irreducible, all roots on the unit circle
        ("x^4+x^3+x^2+x+1", RejectionReason.ROOT_PATTERN_MISMATCH),
        # four real roots
        ("x^4-7x^3+13x^2-7x+1", RejectionReason.ROOT_PATTERN_MISMATCH),
    ],
)
def test_rejections_name_the_first_failed_check(text, reason):
    with pytest.raises(SalemRejection) as exc:
        verify_salem(parse_poly(text))
    assert exc.value.reason is reason


def test_zero_polynomial_is_rejected():
    with pytest.raises(ZeroPolynomialError):
        verify_salem(IntPolynomial(()))


def test_dickson_polynomials():
    assert dickson(0) == poly(2)
    assert dickson(2) == poly(-2, 0, 1)
    assert dickson(3) == poly(0, -3, 0, 1)


def test_trace_polynomial_of_quartic():
    assert trace_polynomial(poly(1, -1, -1, -1, 1)) == poly(-3, -1, 1)


def test_trace_polynomial_needs_palindrome():
    with pytest.raises(DomainError):
        trace_polynomial(poly(1, 2, 3))


def test_refinement_keeps_leading_bits(quartic):
    s64 = refine_theta(quartic, 64)
    assert s64 is quartic
    s512 = refine_theta(quartic, 512)
    with mp.workprec(64):
        assert +s512.theta == +quartic.theta
    with mp.workprec(512):
        assert abs(quartic.minpoly(s512.theta)) < mp.mpf(2) ** -500


def test_refinement_needs_32_bits(quartic):
    with pytest.raises(DomainError):
        refine_theta(quartic, 16)


def test_power_one_is_identity(quartic):
    assert salem_power_minpoly(quartic, 1) == quartic.minpoly


@pytest.mark.parametrize("m", [2, 3, 4, 5])
@pytest.mark.parametrize("name", ["quartic", "sextic"])
def test_powers_are_salem_of_same_degree(request, name, m):
    s = refine_theta(request.getfixturevalue(name), 192)
    q = salem_power_minpoly(s, m)
    assert q.degree == s.degree
    assert q.is_monic and q.is_palindromic
    s_m = verify_salem(q, 192)
    with mp.workprec(192):
        assert abs(s_m.theta - s.theta ** m) < mp.mpf("1e-15")


def test_square_value(quartic):
    s2 = verify_salem(salem_power_minpoly(quartic, 2))
    assert float(s2.theta) == pytest.approx(2.96557, abs=1e-5)


# ---------------- INVARIANTS ----------------

@pytest.mark.parametrize("bits", [64, 256, 1024])
def test_theta_times_its_inverse_is_one(quartic, bits):
    s = refine_theta(quartic, bits)
    small = isolate_real_roots(s.minpoly)[0]
    inverse = root_to_mpf(small, max(bits, s.theta_precision_bits))
    with mp.workprec(bits + 32):
        assert abs(s.theta * inverse - 1) < mp.mpf(2) ** (-bits + 4)


@pytest.mark.parametrize("name", ["quartic", "sextic"])
def test_roots_sum_to_minus_second_coefficient(request, name):
    s = request.getfixturevalue(name)
    with mp.workprec(s.theta_precision_bits):
        total = s.theta + 1 / s.theta + 2 * mp.fsum(mp.cospi(2 * w) for w in s.omegas)
        assert abs(total + s.minpoly[s.degree - 1]) < mp.mpf(2) ** (-s.theta_precision_bits + 8)


@pytest.mark.parametrize("name", ["quartic", "sextic"])
@pytest.mark.parametrize("bits", [None, 600])
def test_minpoly_vanishes_at_theta(request, name, bits):
    s = request.getfixturevalue(name)
    if bits is not None:
        s = refine_theta(s, bits)
    p = s.minpoly
    with mp.workprec(s.theta_precision_bits + 32):
        slope = abs(p.derivative()(s.theta))
        assert abs(p(s.theta)) <= slope * mp.mpf(2) ** (-s.theta_precision_bits + 4)
