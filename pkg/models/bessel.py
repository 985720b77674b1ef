from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from core.config import BESSEL_TERMS
from core.exceptions import DomainError


class Smoothing(str, Enum):
    NONE = "none"
    CESARO = "cesaro"


@dataclass(frozen=True)
class BesselSeriesParams:
    """
    Truncated cosine series 1 + 2 Σ_{k≤K} J0(4kπ)^(t-1) cos 2πkx, the density of
    θ₁ⁿ mod 1 for a Salem number θ₁ of degree 2t.
    """

    t: int
    K_terms: int = BESSEL_TERMS
    smoothing: Smoothing = Smoothing.CESARO

    def __post_init__(self):
        if self.t < 2:
            raise DomainError(f"t must be at least 2, got {self.t}")
        if self.K_terms < 1:
            raise DomainError(f"K_terms must be positive, got {self.K_terms}")
        object.__setattr__(self, "smoothing", Smoothing(self.smoothing))
