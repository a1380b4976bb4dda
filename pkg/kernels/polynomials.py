"""Dense univariate polynomials with exact coefficients.

Coefficients are stored low to high degree with trailing zeros stripped, so
the zero polynomial is the empty tuple and equality is structural.
"""
from dataclasses import dataclass
from fractions import Fraction
from itertools import zip_longest
from typing import Iterable

from kernels.scalar import ZERO, ScalarLike, as_scalar, render_scalar


def _normalise(coeffs: Iterable[Fraction]) -> tuple[Fraction, ...]:
    values = list(coeffs)
    while values and values[-1] == 0:
        values.pop()
    return tuple(values)


@dataclass(frozen=True, init=False)
class Polynomial:
    coeffs: tuple[Fraction, ...]

    def __init__(self, coeffs: Iterable[ScalarLike] = ()):
        object.__setattr__(self, "coeffs", _normalise(as_scalar(c) for c in coeffs))

    @classmethod
    def monomial(cls, power: int, coefficient: ScalarLike = 1) -> "Polynomial":
        return cls([ZERO] * power + [as_scalar(coefficient)])

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def coefficient(self, power: int) -> Fraction:
        if 0 <= power < len(self.coeffs):
            return self.coeffs[power]
        return ZERO

    def shift(self, places: int) -> "Polynomial":
        """Multiply by ``x**places``."""
        if self.is_zero():
            return self
        return Polynomial((ZERO,) * places + self.coeffs)

    def __add__(self, other: "Polynomial") -> "Polynomial":
        return Polynomial(a + b for a, b in zip_longest(self.coeffs, other.coeffs, fillvalue=ZERO))

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return Polynomial(a - b for a, b in zip_longest(self.coeffs, other.coeffs, fillvalue=ZERO))

    def __neg__(self) -> "Polynomial":
        return Polynomial(-c for c in self.coeffs)

    def __mul__(self, other: "Polynomial | ScalarLike") -> "Polynomial":
        if not isinstance(other, Polynomial):
            factor = as_scalar(other)
            return Polynomial(factor * c for c in self.coeffs)
        if self.is_zero() or other.is_zero():
            return Polynomial()
        product = [ZERO] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                product[i + j] += a * b
        return Polynomial(product)

    __rmul__ = __mul__

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        terms = []
        for power in range(self.degree, -1, -1):
            c = self.coeffs[power]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            magnitude = abs(c)
            if power == 0:
                body = render_scalar(magnitude)
            else:
                head = "" if magnitude == 1 else render_scalar(magnitude) + "*"
                body = head + ("x" if power == 1 else f"x^{power}")
            terms.append((sign, body))
        first_sign, first_body = terms[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in terms[1:]:
            text += f" {sign} {body}"
        return text


def poly_sum(polynomials: Iterable[Polynomial]) -> Polynomial:
    total = Polynomial()
    for p in polynomials:
        total = total + p
    return total
