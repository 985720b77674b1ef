from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

import numpy as np

from models.branch import Branch
from models.chebyshev import QForm


@dataclass(frozen=True)
class DensityModel:
    """
    Everything needed to evaluate f and f' for one P:
    the Q form, its branches and the summation bound M.
    """

    q: QForm
    branches: tuple[Branch, ...]
    M: int
    stationary_points: tuple = ()
    stationary_values: tuple = ()
    # arccos(S_k(i)) for i = -M..M, shape (K, 2M+1)
    g_int: np.ndarray = field(default=None, repr=False, compare=False)

    @property
    def K(self) -> int:
        return len(self.branches)

    @property
    def offsets(self) -> np.ndarray:
        return np.arange(-self.M, self.M + 1, dtype=np.float64)


@dataclass(frozen=True)
class Asymptotes:
    # lim_{x -> v-} f' = inf
    left: tuple[float, ...]
    # lim_{x -> v+} f' = inf
    right: tuple[float, ...]

    @property
    def all(self) -> tuple[float, ...]:
        return tuple(sorted(set(self.left) | set(self.right)))


@dataclass(frozen=True)
class ShapeReport:
    A: tuple[float, ...]
    B: tuple[float, ...]
    S: tuple[float, ...]
    partition: tuple[float, ...]
    shape: str
    asymptotes_left: tuple[float, ...]
    asymptotes_right: tuple[float, ...]


@dataclass(frozen=True)
class QuadraticPrediction:
    v: Optional[Fraction]
    shape: str
