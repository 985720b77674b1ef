import math
from functools import lru_cache

import numpy as np
from mpmath import mp

from core.config import TOL_ASYMPTOTE
from core.exceptions import AtAsymptote, DomainError
from core.logger import get_logger
from models.bessel import BesselSeriesParams, Smoothing

logger = get_logger("special")

# ascending series below, Hankel expansion above
J0_SWITCH = 20.0
_HANKEL_MIN_TERMS = 6
_HANKEL_STOP = 1e-17


def _check_open_unit(xs: np.ndarray):
    if xs.size and (xs.min() <= 0.0 or xs.max() >= 1.0):
        raise DomainError("x must lie in (0, 1)")
    for v in (0.0, 1.0):
        near = np.abs(xs - v) < TOL_ASYMPTOTE
        if near.any():
            raise AtAsymptote(float(xs[near][0]), v)


def _real_root(y: np.ndarray, m: int) -> np.ndarray:
    return np.sign(y) * np.abs(y) ** (1.0 / m)


# ---------------- P = x^m ----------------

def xm_density_odd(m: int, x):
    """
    Density of {-(2 cos 2πnω)^m} for odd m:
    π⁻¹ Σ_{i=-2^m}^{2^m-1} r / (2m y √(1 - r²/4)), y = x+i, r = y^(1/m).
    """
    if m < 1 or m % 2 == 0:
        raise DomainError(f"m must be odd and positive, got {m}")

    xs = np.atleast_1d(np.asarray(x, dtype=np.float64))
    _check_open_unit(xs)

    i = np.arange(-(2 ** m), 2 ** m, dtype=np.float64)
    y = xs[:, None] + i[None, :]
    r = _real_root(y, m)
    with np.errstate(divide="ignore", invalid="ignore"):
        terms = r / (2.0 * m * y * np.sqrt(1.0 - r * r / 4.0))
    terms = np.where(np.abs(r) < 2.0, terms, 0.0)

    out = terms.sum(axis=1) / math.pi
    return float(out[0]) if np.ndim(x) == 0 else out


def xm_density_even(m: int, x):
    """
    Density for even m, two inverses per level:
    π⁻¹ Σ_{i=1}^{2^m} r / (m s √(1 - r²/4)), s = i - x, r = s^(1/m).
    """
    if m < 2 or m % 2:
        raise DomainError(f"m must be even and at least 2, got {m}")

    xs = np.atleast_1d(np.asarray(x, dtype=np.float64))
    _check_open_unit(xs)

    i = np.arange(1, 2 ** m + 1, dtype=np.float64)
    s = i[None, :] - xs[:, None]
    r = s ** (1.0 / m)
    with np.errstate(divide="ignore", invalid="ignore"):
        terms = r / (m * s * np.sqrt(1.0 - r * r / 4.0))
    terms = np.where(r < 2.0, terms, 0.0)

    out = terms.sum(axis=1) / math.pi
    return float(out[0]) if np.ndim(x) == 0 else out


# ---------------- BESSEL J0 ----------------

def _j0_series(z: float) -> float:
    # Σ (-1)^k (z²/4)^k / (k!)², cancellation grows like e^z
    with mp.workdps(40):
        zz = mp.mpf(z) ** 2 / 4
        term = mp.mpf(1)
        total = mp.mpf(1)
        k = 0
        while True:
            k += 1
            term = -term * zz / (k * k)
            total += term
            if abs(term) < mp.mpf(10) ** -30 and k > zz:
                break
        return float(total)


def _j0_hankel(z: float) -> float:
    """
    √(2/πz) (P cos χ - Q sin χ), χ = z - π/4, summed until the terms
    drop below 1e-17 or start growing.
    """
    p_sum, q_sum = 1.0, 0.0
    c = 1.0
    prev = math.inf
    k = 0
    while True:
        k += 1
        c *= -((2 * k - 1) ** 2) / (k * 8.0 * z)
        size = abs(c)
        if k >= _HANKEL_MIN_TERMS and (size < _HANKEL_STOP or size > prev):
            break
        prev = size
        if k % 2:
            q_sum += c if (k // 2) % 2 == 0 else -c
        else:
            p_sum += c if (k // 2) % 2 == 0 else -c

    chi = z - math.pi / 4.0
    return math.sqrt(2.0 / (math.pi * z)) * (p_sum * math.cos(chi) - q_sum * math.sin(chi))


def bessel_j0(z: float) -> float:
    if z < 0:
        raise DomainError(f"J0 is evaluated for z >= 0 here, got {z}")
    return _j0_series(z) if z <= J0_SWITCH else _j0_hankel(z)


# ---------------- SERIES DENSITY ----------------

@lru_cache(maxsize=8)
def _j0_table(K: int) -> tuple[float, ...]:
    logger.debug("tabulating J0(4kπ) for k <= %d", K)
    return tuple(bessel_j0(4.0 * k * math.pi) for k in range(1, K + 1))


def series_coefficients(params: BesselSeriesParams) -> np.ndarray:
    """J0(4kπ)^(t-1) for k = 1..K, with Fejér weights when smoothing."""
    base = np.array(_j0_table(params.K_terms))
    coeffs = base ** (params.t - 1)
    if params.smoothing is Smoothing.CESARO:
        k = np.arange(1, params.K_terms + 1, dtype=np.float64)
        coeffs = coeffs * (1.0 - k / (params.K_terms + 1))
    return coeffs


def bessel_density(params: BesselSeriesParams, x):
    xs = np.atleast_1d(np.asarray(x, dtype=np.float64))
    if xs.size and (xs.min() <= 0.0 or xs.max() >= 1.0):
        raise DomainError("x must lie in (0, 1)")

    coeffs = series_coefficients(params)
    k = np.arange(1, params.K_terms + 1, dtype=np.float64)

    out = np.empty(xs.shape)
    # bounded memory for long grids
    for start in range(0, xs.size, 256):
        chunk = xs[start:start + 256]
        out[start:start + 256] = 1.0 + 2.0 * (np.cos(2.0 * math.pi * np.outer(chunk, k)) @ coeffs)
    return float(out[0]) if np.ndim(x) == 0 else out
