import math

import pytest

from models.polynomial import IntPolynomial
from services.density_service import make_model
from utils.fixtures import load_fixture

_TRACE = (1 + math.sqrt(13)) / 2
# larger root of x^2 - y x + 1 for the trace root y > 2
QUARTIC_THETA = (_TRACE + math.sqrt(_TRACE * _TRACE - 4)) / 2
SEXTIC_THETA = 1.4012683679398547


def poly(*coeffs) -> IntPolynomial:
    """Ascending coefficients, poly(0, 1, 1, 1) = x^3 + x^2 + x."""
    return IntPolynomial(tuple(coeffs))


def cubic(a3, a2, a1) -> IntPolynomial:
    return IntPolynomial((0, a1, a2, a3))


def quartic_omega() -> float:
    # trace polynomial y^2 - y - 3, unit-circle root (1 - sqrt 13)/2
    return math.acos((1 - math.sqrt(13)) / 4) / (2 * math.pi)


@pytest.fixture(scope="session")
def quartic():
    return load_fixture("quartic")


@pytest.fixture(scope="session")
def sextic():
    return load_fixture("sextic")


@pytest.fixture(scope="session")
def linear_model():
    return make_model(poly(0, 1))


@pytest.fixture(scope="session")
def cubic_model():
    return make_model(cubic(1, 1, 1))
