"""
Closed forms for low-degree P. They do not go through branch inversion
and are used to cross-check the generic density path.
"""
import math
from typing import Optional

import numpy as np

from core.exceptions import DomainError


def cubic_criticals(a3: int, a2: int, a1: int) -> Optional[tuple[float, float]]:
    """Roots of Q' for P = a3 x³ + a2 x² + a1 x, ascending, or None when complex."""
    if a3 == 0:
        raise DomainError("a3 must be nonzero")

    disc = 9 * a3 * a3 + a2 * a2 - 3 * a1 * a3
    if disc < 0:
        return None

    root = math.sqrt(disc)
    x1 = (-a2 - root) / (6 * a3)
    x2 = (-a2 + root) / (6 * a3)
    return (min(x1, x2), max(x1, x2))


# ---------------- LINEAR ----------------

def _linear_offsets(a1: int) -> np.ndarray:
    if a1 == 0:
        raise DomainError("a1 must be nonzero")
    n = 2 * abs(a1)
    return np.arange(-n, n, dtype=np.float64)


def linear_f(a1: int, x) -> np.ndarray:
    """f(x) = π⁻¹ Σ_{i=-2a1}^{2a1-1} (arccos(-(x+i)/2a1) - arccos(-i/2a1))."""
    xs = np.atleast_1d(np.asarray(x, dtype=np.float64))
    i = _linear_offsets(a1)
    scale = 2.0 * abs(a1)

    y = np.clip(-(xs[:, None] + i[None, :]) / scale, -1.0, 1.0)
    base = np.arccos(-i / scale)
    return (np.arccos(y) - base[None, :]).sum(axis=1) / math.pi


def linear_fprime(a1: int, x) -> np.ndarray:
    """f'(x) = (2 a1 π)⁻¹ Σ_{i=-2a1}^{2a1-1} (1 - (x+i)²/(4a1²))^(-1/2)."""
    xs = np.atleast_1d(np.asarray(x, dtype=np.float64))
    i = _linear_offsets(a1)
    scale = 2.0 * abs(a1)

    r = (xs[:, None] + i[None, :]) / scale
    with np.errstate(divide="ignore", invalid="ignore"):
        terms = np.where(np.abs(r) < 1.0, 1.0 / np.sqrt(1.0 - r * r), 0.0)
    return terms.sum(axis=1) / (scale * math.pi)


# ---------------- QUADRATIC ----------------

def quadratic_gprime(a2: int, a1: int, y) -> np.ndarray:
    """
    g'(y) = π⁻¹ (G1'(y) + G2'(y)) for Q(w) = -4 a2 w² - 2 a1 w + 2 a2.
    The two inverses are w = -(a1 ± √Δ)/(4 a2), Δ = a1² + 8a2² - 4 a2 y;
    each contributes 2|a2| / (√Δ √(16a2² - (a1 ± √Δ)²)) while it lies in (-1, 1).
    """
    if a2 == 0:
        raise DomainError("a2 must be nonzero")

    ys = np.atleast_1d(np.asarray(y, dtype=np.float64))
    delta = a1 * a1 + 8.0 * a2 * a2 - 4.0 * a2 * ys

    total = np.zeros(ys.shape)
    with np.errstate(divide="ignore", invalid="ignore"):
        sq = np.sqrt(np.where(delta > 0, delta, np.nan))
        for sign in (1.0, -1.0):
            num = a1 + sign * sq
            inside = 16.0 * a2 * a2 - num * num
            ok = (delta > 0) & (inside > 0)
            term = 2.0 * abs(a2) / (sq * np.sqrt(inside))
            total += np.where(ok, term, 0.0)
    return total / math.pi


def quadratic_fprime(a2: int, a1: int, x) -> np.ndarray:
    """f'(x) = Σ_{i=-M}^{M} g'(x+i) with M = 6|a2| + 2|a1|."""
    xs = np.atleast_1d(np.asarray(x, dtype=np.float64))
    M = 6 * abs(a2) + 2 * abs(a1)
    i = np.arange(-M, M + 1, dtype=np.float64)

    ys = xs[:, None] + i[None, :]
    return quadratic_gprime(a2, a1, ys.ravel()).reshape(ys.shape).sum(axis=1)
