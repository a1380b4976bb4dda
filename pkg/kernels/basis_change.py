"""Connection coefficients between two families and re-expansion of polynomials."""
import logging
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Sequence

from django.db import models

from kernels.exceptions import DegreeExceedsBuild, HDependsOnK, OrderMismatch
from kernels.inversion import check_recurrence_applicable, inverse_by_orthogonality
from kernels.polynomials import Polynomial, poly_sum
from kernels.scalar import ZERO
from kernels.triangular import (FamilySource, LambdaRecursiveSpec, TableSpec, TriangularKernel,
                                family_polynomial, realize, support_width)

logger = logging.getLogger(__name__)

CONVOLUTION = "convolution"
RECURRENCE = "recurrence"
CHANGE_METHODS = (CONVOLUTION, RECURRENCE)


class Direction(models.TextChoices):
    FORWARD = "forward", "f to g"
    BACKWARD = "backward", "g to f"


@dataclass(frozen=True)
class ChangeTable(TriangularKernel):
    """``z(n,k)`` with ``f_n = Σ_k z(n,k) g_(n-mk)``; a backward table holds ``y`` instead."""

    direction: Direction = Direction.FORWARD


@dataclass(frozen=True)
class CrossOrderTable:
    n: int
    m1: int
    m2: int
    values: tuple[Fraction, ...]

    def __getitem__(self, r: int) -> Fraction:
        return self.values[r]

    def congruence_zeros(self) -> tuple[int, ...]:
        """Indices ``r`` forced to zero because ``r`` and ``n`` differ mod ``gcd(m1, m2)``."""
        g = gcd(self.m1, self.m2)
        return tuple(r for r in range(self.n + 1) if (self.n - r) % g)


def _same_order(first: TriangularKernel, second: TriangularKernel) -> int:
    if first.m != second.m:
        raise OrderMismatch(first.m, second.m)
    return first.m


def change_by_convolution(lambda1: TriangularKernel, mu3: TriangularKernel, n_max: int,
                          direction: Direction = Direction.FORWARD) -> ChangeTable:
    m = _same_order(lambda1, mu3)
    rows = tuple(
        tuple(
            sum((lambda1.lookup(n, b) * mu3.lookup(n - m * b, k - b) for b in range(k + 1)), ZERO)
            for k in range(support_width(n, m) + 1)
        )
        for n in range(n_max + 1)
    )
    return ChangeTable(m=m, rows=rows, name=f"{lambda1.name}->{mu3.name}", direction=direction)


def change_by_recurrence(spec_f: LambdaRecursiveSpec, spec_g: LambdaRecursiveSpec, n_max: int,
                         direction: Direction = Direction.FORWARD) -> ChangeTable:
    if direction == Direction.BACKWARD:
        spec_f, spec_g = spec_g, spec_f
    if spec_f.m != spec_g.m:
        raise OrderMismatch(spec_f.m, spec_g.m)
    m = spec_f.m
    boundary_f = check_recurrence_applicable(spec_f, n_max)
    boundary_g = check_recurrence_applicable(spec_g, n_max)

    rows = []

    def previous(n: int, k: int) -> Fraction:
        if n < 0 or k < 0 or k > support_width(n, m):
            return ZERO
        return rows[n][k]

    for n in range(n_max + 1):
        row = [boundary_f[n] / boundary_g[n]]
        if n >= m:
            p1 = spec_f.principal(n)
            h1 = spec_f.auxiliary(n)
            for k in range(1, support_width(n, m) + 1):
                t = n - k * m
                s = n - (k - 1) * m
                if t >= m:
                    step = 1 / spec_g.principal(t)
                elif t >= 1:
                    step = boundary_g[t - 1] / boundary_g[t]
                else:
                    step = ZERO
                shift = spec_g.auxiliary(s) / spec_g.principal(s)
                row.append(p1 * step * previous(n - 1, k)
                           + p1 * shift * previous(n - 1, k - 1)
                           - h1 * previous(n - m, k - 1))
        rows.append(tuple(row))

    logger.debug("change table %s -> %s by recurrence through n=%d", spec_f.name, spec_g.name, n_max)
    return ChangeTable(m=m, rows=tuple(rows), name=f"{spec_f.name}->{spec_g.name}",
                       direction=direction)


def change_table(source_f: FamilySource, source_g: FamilySource, n_max: int,
                 method: str = CONVOLUTION, direction: Direction = Direction.FORWARD) -> ChangeTable:
    """Entry point used by the ``change`` command."""
    if source_f.m != source_g.m:
        raise OrderMismatch(source_f.m, source_g.m)
    if method == RECURRENCE:
        for source in (source_f, source_g):
            if isinstance(source, TableSpec):
                raise HDependsOnK(source.name)
        return change_by_recurrence(source_f, source_g, n_max, direction)
    if direction == Direction.BACKWARD:
        source_f, source_g = source_g, source_f
    lambda1 = realize(source_f, n_max)
    mu3 = inverse_by_orthogonality(realize(source_g, n_max), n_max)
    return change_by_convolution(lambda1, mu3, n_max, direction)


def change_cross_order(lambda1: TriangularKernel, mu3: TriangularKernel, n: int) -> CrossOrderTable:
    m1, m2 = lambda1.m, mu3.m
    values = [ZERO] * (n + 1)
    for b in range(support_width(n, m1) + 1):
        coefficient = lambda1.lookup(n, b)
        if coefficient == 0:
            continue
        d = n - m1 * b
        for c in range(support_width(d, m2) + 1):
            values[d - m2 * c] += coefficient * mu3.lookup(d, c)
    return CrossOrderTable(n=n, m1=m1, m2=m2, values=tuple(values))


def expand_in_basis(p: Polynomial, direct: TriangularKernel,
                    inverse: TriangularKernel) -> tuple[Fraction, ...]:
    """Coefficients ``C(0..N)`` with ``p = Σ_r C(r) f_r``."""
    m = _same_order(direct, inverse)
    degree = p.degree
    if degree < 0:
        return ()
    built = min(direct.n_max, inverse.n_max)
    if degree > built:
        raise DegreeExceedsBuild(degree, built)
    return tuple(
        sum((p.coefficient(r + m * t) * inverse.lookup(r + m * t, t)
             for t in range((degree - r) // m + 1)), ZERO)
        for r in range(degree + 1)
    )


def combine(coefficients: Sequence[Fraction], kernel: TriangularKernel) -> Polynomial:
    return poly_sum(family_polynomial(kernel, r) * c for r, c in enumerate(coefficients) if c != 0)


def reconstruct_change(table: TriangularKernel, target: TriangularKernel, n: int) -> Polynomial:
    """``Σ_k z(n,k) g_(n-mk)``."""
    m = _same_order(table, target)
    return poly_sum(
        family_polynomial(target, n - m * k) * table.lookup(n, k)
        for k in range(support_width(n, m) + 1)
    )


def reconstruct_cross(table: CrossOrderTable, target: TriangularKernel) -> Polynomial:
    return combine(table.values, target)


def compose_tables(first: TriangularKernel, second: TriangularKernel, n_max: int) -> TriangularKernel:
    """``(second ∘ first)(n,k) = Σ_(b<=k) first(n,b) second(n-mb,k-b)``."""
    m = _same_order(first, second)
    rows = tuple(
        tuple(
            sum((first.lookup(n, b) * second.lookup(n - m * b, k - b) for b in range(k + 1)), ZERO)
            for k in range(support_width(n, m) + 1)
        )
        for n in range(n_max + 1)
    )
    return TriangularKernel(m=m, rows=rows, name=f"{first.name}*{second.name}")
