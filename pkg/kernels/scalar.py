"""Exact rational coefficients.

``Scalar`` is :class:`fractions.Fraction`: arbitrary-precision numerator and
denominator, always canonical (positive denominator, reduced), compared
structurally. Text form is ``"p/q"`` with ``q`` omitted when it is 1.
"""
import re
from fractions import Fraction

from kernels.exceptions import ScalarSyntaxError, ZeroNotInvertible

Scalar = Fraction

ZERO = Fraction(0)
ONE = Fraction(1)

_SCALAR_TEXT = re.compile(r"\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*\Z")

ScalarLike = Fraction | int | str


def add(a: Scalar, b: Scalar) -> Scalar:
    return a + b


def mul(a: Scalar, b: Scalar) -> Scalar:
    return a * b


def inverse(a: Scalar, context: str = "") -> Scalar:
    if a == 0:
        raise ZeroNotInvertible(context)
    return 1 / Fraction(a)


def parse_scalar(text: str) -> Scalar:
    """Parse ``[+-]p[/q]``; decimals and exponents are rejected."""
    match = _SCALAR_TEXT.match(text)
    if match is None:
        raise ScalarSyntaxError(text)
    numerator, denominator = match.groups()
    if denominator is None:
        return Fraction(int(numerator))
    if int(denominator) == 0:
        raise ZeroNotInvertible(f"denominator of {text.strip()!r}")
    return Fraction(int(numerator), int(denominator))


def render_scalar(a: Scalar) -> str:
    if a.denominator == 1:
        return str(a.numerator)
    return f"{a.numerator}/{a.denominator}"


def as_scalar(value: ScalarLike) -> Scalar:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise ScalarSyntaxError(repr(value))
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_scalar(value)
    raise ScalarSyntaxError(repr(value))
