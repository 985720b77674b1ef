from __future__ import annotations

import operator
from dataclasses import dataclass
from fractions import Fraction

import sympy as sp

X = sp.Symbol("x")


@dataclass(frozen=True)
class IntPolynomial:
    """
    Integer polynomial, coefficients in ascending order (index j holds a_j).
    Trailing zeros are stripped so the last entry is the leading coefficient;
    the zero polynomial is the empty tuple.
    """

    coeffs: tuple[int, ...]

    def __post_init__(self):
        try:
            coeffs = [operator.index(c) for c in self.coeffs]
        except TypeError:
            raise TypeError(f"coefficients must be exact integers: {self.coeffs!r}")

        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        object.__setattr__(self, "coeffs", tuple(coeffs))

    # ---------------- PROPERTIES ----------------

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    @property
    def is_monic(self) -> bool:
        return self.leading == 1

    @property
    def is_palindromic(self) -> bool:
        return self.coeffs == self.coeffs[::-1]

    def __getitem__(self, j: int) -> int:
        return self.coeffs[j] if 0 <= j < len(self.coeffs) else 0

    # ---------------- EVALUATION ----------------

    def __call__(self, x):
        """Horner evaluation; works for int, Fraction, float and mpf."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def sign_at(self, value: Fraction) -> int:
        v = self(Fraction(value))
        return (v > 0) - (v < 0)

    def sign_at_dyadic(self, man: int, exp: int) -> int:
        """Exact sign of p(man * 2**exp) using integer arithmetic only."""
        if exp >= 0:
            v = self(man << exp)
        else:
            shift = -exp
            d = self.degree
            v = sum(a * man ** j << (shift * (d - j)) for j, a in enumerate(self.coeffs))
        return (v > 0) - (v < 0)

    # ---------------- ARITHMETIC ----------------

    def derivative(self) -> IntPolynomial:
        return IntPolynomial(tuple(j * a for j, a in enumerate(self.coeffs))[1:])

    def __add__(self, other: IntPolynomial) -> IntPolynomial:
        n = max(len(self.coeffs), len(other.coeffs))
        return IntPolynomial(tuple(self[j] + other[j] for j in range(n)))

    def __neg__(self) -> IntPolynomial:
        return IntPolynomial(tuple(-a for a in self.coeffs))

    def __sub__(self, other: IntPolynomial) -> IntPolynomial:
        return self + (-other)

    def scale(self, k: int) -> IntPolynomial:
        return IntPolynomial(tuple(k * a for a in self.coeffs))

    def shift_up(self, k: int = 1) -> IntPolynomial:
        """Multiply by x**k."""
        if self.is_zero:
            return self
        return IntPolynomial((0,) * k + self.coeffs)

    def with_constant(self, c: int) -> IntPolynomial:
        rest = self.coeffs[1:] if self.coeffs else ()
        return IntPolynomial((c,) + rest)

    # ---------------- CONVERSION ----------------

    def to_sympy(self) -> sp.Poly:
        return sp.Poly(list(reversed(self.coeffs)) or [0], X, domain="ZZ")

    @classmethod
    def from_sympy(cls, poly: sp.Poly) -> IntPolynomial:
        return cls(tuple(int(c) for c in reversed(poly.all_coeffs())))

    def descending_floats(self) -> list[float]:
        return [float(c) for c in reversed(self.coeffs)]

    def __str__(self) -> str:
        if self.is_zero:
            return "0"

        parts = []
        for j in range(self.degree, -1, -1):
            a = self.coeffs[j]
            if a == 0:
                continue
            sign = "-" if a < 0 else "+"
            mag = abs(a)
            if j == 0:
                body = str(mag)
            else:
                power = "x" if j == 1 else f"x^{j}"
                body = power if mag == 1 else f"{mag}{power}"
            parts.append((sign, body))

        first_sign, first_body = parts[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            text += f"{sign}{body}"
        return text


@dataclass(frozen=True)
class RealRoot:
    """
    One distinct real root isolated in [lo, hi] (rational endpoints).
    `factor` is the square-free factor the root belongs to, used for refinement.
    """

    lo: Fraction
    hi: Fraction
    multiplicity: int
    factor: IntPolynomial

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def midpoint(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def contains(self, value: Fraction) -> bool:
        return self.lo <= value <= self.hi
