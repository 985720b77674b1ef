from __future__ import annotations

from dataclasses import dataclass, field

from models.polynomial import IntPolynomial, RealRoot


@dataclass(frozen=True)
class SalemNumber:
    """
    A verified Salem number θ given by its minimal polynomial.
    theta and omegas are mpf values correct to theta_precision_bits;
    omegas are the unit-circle conjugate angles divided by 2π, ascending.
    """

    minpoly: IntPolynomial
    theta: object
    theta_precision_bits: int
    omegas: tuple
    theta_root: RealRoot = field(repr=False, compare=False)
    trace_roots: tuple[RealRoot, ...] = field(repr=False, compare=False)

    @property
    def degree(self) -> int:
        return self.minpoly.degree

    @property
    def t(self) -> int:
        return self.degree // 2
