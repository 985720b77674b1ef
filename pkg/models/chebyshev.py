from __future__ import annotations

from dataclasses import dataclass

from models.polynomial import IntPolynomial


@dataclass(frozen=True)
class QForm:
    """
    Q(w) = -2 * sum_k c_k w^k. `c` holds the inner integer coefficients;
    the global factor -2 is applied on evaluation.
    a0_normalized is set when the source's constant term was zeroed.
    """

    c: tuple[int, ...]
    m: int
    source: IntPolynomial
    a0_normalized: bool = False

    @property
    def inner(self) -> IntPolynomial:
        return IntPolynomial(self.c)

    @property
    def poly(self) -> IntPolynomial:
        return self.inner.scale(-2)

    @property
    def derivative(self) -> IntPolynomial:
        return self.poly.derivative()

    def __call__(self, w):
        return -2 * self.inner(w)
