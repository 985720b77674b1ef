from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Optional

import numpy as np

from models.polynomial import IntPolynomial
from models.salem import SalemNumber


class Method(str, Enum):
    EXACT = "exact"
    CONJUGATE = "conjugate"
    AUTO = "auto"


@dataclass(frozen=True)
class PrecisionSegment:
    n_start: int
    n_end: int
    bits: int


@dataclass(frozen=True)
class SequenceRun:
    """Fractional parts {P(θⁿ)} for n = 1..n_max; values[n - 1] belongs to n."""

    salem: SalemNumber
    p: IntPolynomial
    n_max: int
    method: Method
    values: np.ndarray = field(repr=False, compare=False)
    precision_log: tuple[PrecisionSegment, ...] = ()


@dataclass(frozen=True)
class HistogramReport:
    p_bins: int
    counts: np.ndarray = field(repr=False)
    normalized: np.ndarray = field(repr=False)
    ks_distance: Optional[float] = None
    # bins holding an asymptote abscissa; reported, never dropped
    excluded_bins: tuple[int, ...] = ()

    @property
    def edges(self) -> np.ndarray:
        return np.linspace(0.0, 1.0, self.p_bins + 1)

    @property
    def max_uniform_deviation(self) -> float:
        return float(np.abs(self.normalized - 1.0).max())


@dataclass(frozen=True)
class ComparisonRecord:
    ks_distance: float
    # KS distance of the first n_max // 100 values
    ks_prefix: float
    converging: bool
    analytic_bin_avg: np.ndarray = field(repr=False)
    bin_errors: np.ndarray = field(repr=False)
    max_bin_error: float = 0.0
    excluded_bins: tuple[int, ...] = ()
