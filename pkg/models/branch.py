from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class CriticalPartition:
    # -1 = x_0 < x_1 < ... < x_K = 1, interior points are sign changes of Q'
    points: tuple
    # even-multiplicity roots of Q' in (-1, 1); they do not split a branch
    stationary: tuple

    @property
    def K(self) -> int:
        return len(self.points) - 1


@dataclass(frozen=True)
class Branch:
    """
    One monotone piece of Q on [x_lo, x_hi] with value interval [alpha, beta].
    Endpoints are mpf; the *_f properties give float views for vectorized work.
    """

    k: int
    x_lo: object
    x_hi: object
    alpha: object
    beta: object
    increasing: bool

    @property
    def lo_f(self) -> float:
        return float(self.x_lo)

    @property
    def hi_f(self) -> float:
        return float(self.x_hi)

    @property
    def alpha_f(self) -> float:
        return float(self.alpha)

    @property
    def beta_f(self) -> float:
        return float(self.beta)
