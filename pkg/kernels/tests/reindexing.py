"""Reference double sums for the reindexation tests.

Each function sums the same family ``a(j, k)`` over the same index set in a
different order. ``change_by_convolution`` and ``expand_in_basis`` sum in one
fixed order and do not import this module; the tests use it to show that the
orders agree.
"""
from fractions import Fraction
from typing import Callable

from kernels.scalar import ZERO

Family = Callable[[int, int], Fraction]


def convolution_by_rows(a: Family, u: int) -> Fraction:
    """``Σ_(k=0..u) Σ_(b=0..k) a(b,k)``."""
    return sum((a(b, k) for k in range(u + 1) for b in range(k + 1)), ZERO)


def convolution_by_offsets(a: Family, u: int) -> Fraction:
    """``Σ_(b=0..u) Σ_(c=0..u-b) a(b,b+c)``."""
    return sum((a(b, b + c) for b in range(u + 1) for c in range(u - b + 1)), ZERO)


def classes_by_congruence(a: Family, n: int, m: int) -> Fraction:
    """``Σ_(k=0..n) Σ_(j=0..k) a(j,k) [k ≡ j mod m]``."""
    return sum((a(j, k) for k in range(n + 1) for j in range(k + 1) if (k - j) % m == 0), ZERO)


def classes_by_column(a: Family, n: int, m: int) -> Fraction:
    """``Σ_(k=0..n) Σ_(t=0..k//m) a(k-mt,k)``."""
    return sum((a(k - m * t, k) for k in range(n + 1) for t in range(k // m + 1)), ZERO)


def classes_by_residue(a: Family, n: int, m: int) -> Fraction:
    """``Σ_(j=0..n) Σ_(t=0..(n-j)//m) a(j,j+mt)``."""
    return sum((a(j, j + m * t) for j in range(n + 1) for t in range((n - j) // m + 1)), ZERO)
