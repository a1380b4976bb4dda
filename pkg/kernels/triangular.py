"""Triangular kernels of order m and lambda-recursive families.

A kernel of order ``m`` stores row ``n`` as the ``w_m(n) + 1 = n // m + 1``
entries ``λ(n, 0..w_m(n))``. Lookups outside that support return zero, so
recurrences can reference ``λ(n-m, k-1)`` and friends without bounds logic.
"""
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Iterator, Sequence

from kernels.exceptions import (BadInitialLength, BadResidue, BadRowLength, DivisionByZero,
                                ExprUndefined, PIsKFree, RowNotBuilt, SpecFileError)
from kernels.expressions import Expression, parse
from kernels.polynomials import Polynomial
from kernels.scalar import ZERO, ScalarLike, as_scalar

logger = logging.getLogger(__name__)

Row = tuple[Fraction, ...]


def support_width(n: int, m: int) -> int:
    """``w_m(n)``: the largest in-support column of row ``n``."""
    return n // m


@dataclass(frozen=True)
class TriangularKernel:
    m: int
    rows: tuple[Row, ...]
    name: str = ""

    def __post_init__(self):
        if self.m < 1:
            raise SpecFileError(f"order m must be positive, got {self.m}")
        if not self.rows:
            raise SpecFileError("a kernel needs at least row 0")
        for n, row in enumerate(self.rows):
            expected = support_width(n, self.m) + 1
            if len(row) != expected:
                raise BadRowLength(n, expected, len(row))

    @classmethod
    def from_rows(cls, m: int, rows: Iterable[Iterable[ScalarLike]], name: str = ""):
        return cls(m=m, rows=tuple(tuple(as_scalar(v) for v in row) for row in rows), name=name)

    @property
    def n_max(self) -> int:
        return len(self.rows) - 1

    def width(self, n: int) -> int:
        return support_width(n, self.m)

    def lookup(self, n: int, k: int) -> Fraction:
        if n > self.n_max:
            raise RowNotBuilt(n, self.n_max)
        if n < 0 or k < 0 or k > support_width(n, self.m):
            return ZERO
        return self.rows[n][k]

    def row(self, n: int) -> Row:
        if n < 0 or n > self.n_max:
            raise RowNotBuilt(n, self.n_max)
        return self.rows[n]

    def entries(self) -> Iterator[tuple[int, int, Fraction]]:
        for n, row in enumerate(self.rows):
            for k, value in enumerate(row):
                yield n, k, value

    def truncate(self, n_max: int) -> "TriangularKernel":
        if n_max > self.n_max:
            raise RowNotBuilt(n_max, self.n_max)
        return TriangularKernel(m=self.m, rows=self.rows[:n_max + 1], name=self.name)

    def with_entry(self, n: int, k: int, value: Fraction) -> "TriangularKernel":
        """Copy with one in-support entry replaced."""
        rows = [list(row) for row in self.rows]
        rows[n][k] = value
        return TriangularKernel.from_rows(self.m, rows, self.name)


def kernel_from_function(m: int, n_max: int, entry: Callable[[int, int], Fraction],
                         name: str = "") -> TriangularKernel:
    return TriangularKernel(
        m=m,
        rows=tuple(
            tuple(entry(n, k) for k in range(support_width(n, m) + 1))
            for n in range(n_max + 1)
        ),
        name=name,
    )


@dataclass(frozen=True)
class LambdaRecursiveSpec:
    """``λ1(n,k) = p_n λ1(n-1,k) - h(n,k) λ1(n-m,k-1)`` with ``λ1(n,0) = c_n`` for ``n < m``."""

    m: int
    initial: tuple[Fraction, ...]
    p: Expression
    h: Expression
    name: str = ""

    def __post_init__(self):
        if self.m < 1:
            raise SpecFileError(f"order m must be positive, got {self.m}")
        if len(self.initial) != self.m:
            raise BadInitialLength(self.m, len(self.initial))
        if self.p.mentions("k"):
            raise PIsKFree(str(self.p))

    @classmethod
    def from_text(cls, m: int, initial: Sequence[ScalarLike], p: str, h: str,
                  name: str = "") -> "LambdaRecursiveSpec":
        return cls(
            m=m,
            initial=tuple(as_scalar(c) for c in initial),
            p=parse(p),
            h=parse(h),
            name=name,
        )

    @property
    def h_is_k_free(self) -> bool:
        return not self.h.mentions("k")

    def principal(self, n: int) -> Fraction:
        try:
            return self.p.evaluate(n)
        except DivisionByZero as exc:
            raise ExprUndefined(n, 0, "principal factor") from exc

    def auxiliary(self, n: int, k: int = 0) -> Fraction:
        try:
            return self.h.evaluate(n, k)
        except DivisionByZero as exc:
            raise ExprUndefined(n, k, "auxiliary factor") from exc


@dataclass(frozen=True)
class TableSpec:
    """A family given by its explicit coefficient table."""

    kernel: TriangularKernel
    name: str = ""

    @property
    def m(self) -> int:
        return self.kernel.m


FamilySource = LambdaRecursiveSpec | TableSpec


def build_direct_kernel(spec: LambdaRecursiveSpec, n_max: int) -> TriangularKernel:
    if n_max < 0:
        raise RowNotBuilt(n_max, -1)
    m = spec.m
    rows: list = []

    def built(n: int, k: int) -> Fraction:
        if n < 0 or k < 0 or k > support_width(n, m):
            return ZERO
        return rows[n][k]

    for n in range(n_max + 1):
        if n < m:
            rows.append((spec.initial[n],))
            continue
        p_n = spec.principal(n)
        row = [p_n * built(n - 1, 0)]
        for k in range(1, support_width(n, m) + 1):
            row.append(p_n * built(n - 1, k) - spec.auxiliary(n, k) * built(n - m, k - 1))
        rows.append(tuple(row))

    logger.debug("built direct kernel %s (m=%d) through n=%d", spec.name or "<anonymous>", m, n_max)
    return TriangularKernel(m=m, rows=tuple(rows), name=spec.name)


def realize(source: FamilySource, n_max: int) -> TriangularKernel:
    """Direct kernel of either spec variant, rows ``0..n_max``."""
    if isinstance(source, TableSpec):
        return source.kernel.truncate(n_max)
    return build_direct_kernel(source, n_max)


def family_polynomial(kernel: TriangularKernel, n: int) -> Polynomial:
    row = kernel.row(n)
    coeffs = [ZERO] * (n + 1)
    for b, value in enumerate(row):
        coeffs[n - kernel.m * b] = value
    return Polynomial(coeffs)


def boundary_value(spec: LambdaRecursiveSpec, n: int) -> Fraction:
    """``λ1(n,0)`` from the initial data and principal factors alone."""
    if n < spec.m:
        return spec.initial[n]
    value = spec.initial[spec.m - 1]
    for i in range(spec.m, n + 1):
        value *= spec.principal(i)
    return value


@dataclass(frozen=True)
class Admissibility:
    ok: bool
    offending: int | None = None

    def __bool__(self) -> bool:
        return self.ok


def is_admissible(kernel: TriangularKernel) -> Admissibility:
    for n, row in enumerate(kernel.rows):
        if row[0] == 0:
            return Admissibility(False, n)
    return Admissibility(True)


@dataclass(frozen=True)
class ClassKernel:
    """One residue class of a kernel, indexed ``(k, t)`` with ``0 <= t <= k``."""

    m: int
    r: int
    rows: tuple[Row, ...] = field(default=())

    @property
    def k_max(self) -> int:
        return len(self.rows) - 1

    def lookup(self, k: int, t: int) -> Fraction:
        if k > self.k_max:
            raise RowNotBuilt(self.m * k + self.r, self.m * self.k_max + self.r)
        if k < 0 or t < 0 or t > k:
            return ZERO
        return self.rows[k][t]


def _class_rows(kernel: TriangularKernel, r: int, column: Callable[[int, int], int]):
    if not 0 <= r < kernel.m:
        raise BadResidue(r, kernel.m)
    k_max = (kernel.n_max - r) // kernel.m if kernel.n_max >= r else -1
    return tuple(
        tuple(kernel.lookup(kernel.m * k + r, column(k, t)) for t in range(k + 1))
        for k in range(k_max + 1)
    )


def class_view(kernel: TriangularKernel, r: int) -> ClassKernel:
    """``λ1^<r>(k,t) = λ1(mk+r, k-t)``."""
    return ClassKernel(m=kernel.m, r=r, rows=_class_rows(kernel, r, lambda k, t: k - t))


def inverse_class_view(kernel: TriangularKernel, r: int) -> ClassKernel:
    """``λ3^<r>(k,t) = λ3(mk+r, t)``."""
    return ClassKernel(m=kernel.m, r=r, rows=_class_rows(kernel, r, lambda k, t: t))


def class_polynomial(view: ClassKernel, k: int) -> Polynomial:
    """``f^<r>_k(x) = Σ_t λ1^<r>(k,t) x^(r+mt)``."""
    coeffs = [ZERO] * (view.r + view.m * k + 1)
    for t in range(k + 1):
        coeffs[view.r + view.m * t] = view.lookup(k, t)
    return Polynomial(coeffs)
