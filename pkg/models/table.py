from __future__ import annotations

from dataclasses import dataclass
from typing import Optional


@dataclass(frozen=True)
class ShapeTableRow:
    # (a3, a2, a1) of P = a3 x³ + a2 x² + a1 x
    coeffs: tuple[int, int, int]
    # None when Q' has no real roots
    x1: Optional[float]
    x2: Optional[float]
    # None when the critical point lies outside [-1, 1]
    q1: Optional[float]
    q2: Optional[float]
    A: tuple[float, ...]
    B: tuple[float, ...]
    S: tuple[float, ...]
    shape: str
