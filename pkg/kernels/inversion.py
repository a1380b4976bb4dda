"""Inverse kernels against the monomial basis.

Three independent routes to ``λ3`` with ``x^n = Σ_b λ3(n,b) f_(n-mb)(x)``:

* ``orthogonality``: forward substitution through the discrete orthogonality
  relation, valid for every admissible kernel;
* ``determinant``: a closed form through the lower Hessenberg expansion
  matrix, one entry at a time;
* ``recurrence``: a two-term row recurrence, only for lambda-recursive
  families whose auxiliary factor does not depend on ``k``.
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from kernels.exceptions import (BadDimension, HDependsOnK, KernelError, NotAdmissible,
                                OrderMismatch, PrincipalFactorZero)
from kernels.polynomials import Polynomial, poly_sum
from kernels.scalar import ONE, ZERO
from kernels.triangular import (FamilySource, LambdaRecursiveSpec, TableSpec, TriangularKernel,
                                boundary_value, family_polynomial, realize, support_width)

logger = logging.getLogger(__name__)

ORTHOGONALITY = "orthogonality"
DETERMINANT = "determinant"
RECURRENCE = "recurrence"
METHODS = (ORTHOGONALITY, DETERMINANT, RECURRENCE)


def require_admissible(kernel: TriangularKernel, n_max: int | None = None) -> None:
    limit = kernel.n_max if n_max is None else n_max
    for n in range(limit + 1):
        if kernel.lookup(n, 0) == 0:
            raise NotAdmissible(n)


# --- orthogonality ---------------------------------------------------------

def inverse_by_orthogonality(kernel: TriangularKernel, n_max: int) -> TriangularKernel:
    require_admissible(kernel, n_max)
    m = kernel.m
    rows = []
    for n in range(n_max + 1):
        row = [ONE / kernel.lookup(n, 0)]
        for k in range(1, support_width(n, m) + 1):
            acc = sum((row[b] * kernel.lookup(n - m * b, k - b) for b in range(k)), ZERO)
            row.append(-acc / kernel.lookup(n - m * k, 0))
        rows.append(tuple(row))
    logger.debug("inverted %s by orthogonality through n=%d", kernel.name or "<kernel>", n_max)
    return TriangularKernel(m=m, rows=tuple(rows), name=kernel.name)


# --- determinant -----------------------------------------------------------

@dataclass(frozen=True)
class ExpansionMatrix:
    """Lower Hessenberg ``k x k`` matrix with ``a_ij = λ1(n-(j-1)m, i-j+1)`` for ``j <= i+1``."""

    n: int
    k: int
    entries: tuple[tuple[Fraction, ...], ...]

    def entry(self, i: int, j: int) -> Fraction:
        """1-based access."""
        return self.entries[i - 1][j - 1]

    def __len__(self) -> int:
        return self.k


def build_expansion_matrix(kernel: TriangularKernel, n: int, k: int,
                           strict: bool = True) -> ExpansionMatrix:
    limit = support_width(n, kernel.m)
    if k < 0 or (strict and not 1 <= k <= limit):
        raise BadDimension(n, k, limit)
    m = kernel.m
    entries = tuple(
        tuple(
            kernel.lookup(n - (j - 1) * m, i - j + 1) if j <= i + 1 else ZERO
            for j in range(1, k + 1)
        )
        for i in range(1, k + 1)
    )
    return ExpansionMatrix(n=n, k=k, entries=entries)


def hessenberg_det(matrix: ExpansionMatrix) -> Fraction:
    """Determinant of a lower Hessenberg matrix by leading minors.

    ``D_i = Σ_(j<=i) (-1)^(i-j) a_ij (a_(j,j+1) ... a_(i-1,i)) D_(j-1)``;
    no divisions, quadratic in the dimension.
    """
    minors = [ONE]
    for i in range(1, matrix.k + 1):
        total = ZERO
        chain = ONE
        for j in range(i, 0, -1):
            if j < i:
                chain *= matrix.entry(j, j + 1)
                if chain == 0:
                    break
            term = matrix.entry(i, j) * chain * minors[j - 1]
            total += term if (i - j) % 2 == 0 else -term
        minors.append(total)
    return minors[-1]


def inverse_by_determinant(kernel: TriangularKernel, n: int, k: int) -> Fraction:
    limit = support_width(n, kernel.m)
    if not 0 <= k <= limit:
        raise BadDimension(n, k, limit)
    denominator = ONE
    for i in range(k + 1):
        boundary = kernel.lookup(n - i * kernel.m, 0)
        if boundary == 0:
            raise NotAdmissible(n - i * kernel.m)
        denominator *= boundary
    if k == 0:
        return ONE / denominator
    det = hessenberg_det(build_expansion_matrix(kernel, n, k))
    sign = 1 if k % 2 == 0 else -1
    return sign * det / denominator


def inverse_table_by_determinant(kernel: TriangularKernel, n_max: int) -> TriangularKernel:
    require_admissible(kernel, n_max)
    rows = tuple(
        tuple(inverse_by_determinant(kernel, n, k) for k in range(support_width(n, kernel.m) + 1))
        for n in range(n_max + 1)
    )
    logger.debug("inverted %s by determinants through n=%d", kernel.name or "<kernel>", n_max)
    return TriangularKernel(m=kernel.m, rows=rows, name=kernel.name)


# --- recurrence ------------------------------------------------------------

def _boundary_step(spec: LambdaRecursiveSpec, boundary, t: int) -> Fraction:
    """``A(n,k)`` of the inverse recurrence, keyed on ``t = n - km``."""
    if t >= spec.m:
        return ONE / spec.principal(t)
    if t >= 1:
        return boundary[t - 1] / boundary[t]
    return ZERO


def check_recurrence_applicable(spec: LambdaRecursiveSpec, n_max: int):
    """Validate the hypotheses of the row recurrences and return the boundary column."""
    if not spec.h_is_k_free:
        raise HDependsOnK(spec.name)
    for n in range(spec.m, n_max + 1):
        if spec.principal(n) == 0:
            raise PrincipalFactorZero(n)
    boundary = [boundary_value(spec, n) for n in range(n_max + 1)]
    for n, value in enumerate(boundary):
        if value == 0:
            raise NotAdmissible(n)
    return boundary


def inverse_by_recurrence(spec: LambdaRecursiveSpec, n_max: int) -> TriangularKernel:
    boundary = check_recurrence_applicable(spec, n_max)
    m = spec.m
    rows = []

    def previous(n: int, k: int) -> Fraction:
        if k < 0 or k > support_width(n, m):
            return ZERO
        return rows[n][k]

    for n in range(n_max + 1):
        row = [ONE / boundary[n]]
        for k in range(1, support_width(n, m) + 1):
            t = n - k * m
            s = n - (k - 1) * m
            shift = spec.auxiliary(s) / spec.principal(s)
            row.append(_boundary_step(spec, boundary, t) * previous(n - 1, k)
                       + shift * previous(n - 1, k - 1))
        rows.append(tuple(row))
    logger.debug("inverted %s by recurrence through n=%d", spec.name or "<spec>", n_max)
    return TriangularKernel(m=m, rows=tuple(rows), name=spec.name)


# --- verification ----------------------------------------------------------

def orthogonality_residual(direct: TriangularKernel, inverse: TriangularKernel,
                           n: int, k: int) -> Fraction:
    """``Σ_(b<=k) λ3(n,b) λ1(n-mb,k-b)``: 1 for ``k = 0`` and 0 otherwise on success."""
    if direct.m != inverse.m:
        raise OrderMismatch(direct.m, inverse.m)
    m = direct.m
    return sum((inverse.lookup(n, b) * direct.lookup(n - m * b, k - b) for b in range(k + 1)), ZERO)


def verify_inversion(direct: TriangularKernel, inverse: TriangularKernel, n: int) -> bool:
    if direct.m != inverse.m:
        raise OrderMismatch(direct.m, inverse.m)
    m = direct.m
    combined = poly_sum(
        family_polynomial(direct, n - m * b) * inverse.lookup(n, b)
        for b in range(support_width(n, m) + 1)
    )
    return combined == Polynomial.monomial(n)


def determinant_recurrence_rhs(spec: LambdaRecursiveSpec, kernel: TriangularKernel,
                               n: int, k: int) -> Fraction:
    """Right side of the determinant recurrence for a k-free auxiliary factor.

    ``(Π_(j=1..k) p_(n-(j-1)m)) |M(n-1,k)|
    - (Π_(j=1..k-1) p_(n-(j-1)m)) h_(n-(k-1)m) λ1(n-km,0) |M(n-1,k-1)|``
    """
    if not spec.h_is_k_free:
        raise HDependsOnK(spec.name)
    m = spec.m
    leading = ONE
    for j in range(1, k):
        leading *= spec.principal(n - (j - 1) * m)
    full = leading * spec.principal(n - (k - 1) * m)
    det_k = hessenberg_det(build_expansion_matrix(kernel, n - 1, k, strict=False))
    det_k1 = hessenberg_det(build_expansion_matrix(kernel, n - 1, k - 1, strict=False))
    s = n - (k - 1) * m
    return full * det_k - leading * spec.auxiliary(s) * kernel.lookup(n - k * m, 0) * det_k1


# --- dispatch --------------------------------------------------------------

def applicable_methods(source: FamilySource) -> tuple[str, ...]:
    if isinstance(source, LambdaRecursiveSpec) and source.h_is_k_free:
        return METHODS
    return (ORTHOGONALITY, DETERMINANT)


def compute_inverse(source: FamilySource, n_max: int, method: str = ORTHOGONALITY,
                    kernel: TriangularKernel | None = None) -> TriangularKernel:
    if method == RECURRENCE:
        if isinstance(source, TableSpec):
            raise HDependsOnK(source.name)
        return inverse_by_recurrence(source, n_max)
    direct = kernel if kernel is not None else realize(source, n_max)
    if method == DETERMINANT:
        return inverse_table_by_determinant(direct, n_max)
    if method == ORTHOGONALITY:
        return inverse_by_orthogonality(direct, n_max)
    raise KernelError(f"unknown inversion method {method!r}")


def compute_all_inverses(source: FamilySource, n_max: int,
                         methods: Iterable[str] | None = None) -> dict[str, TriangularKernel]:
    direct = realize(source, n_max)
    chosen = tuple(methods) if methods is not None else applicable_methods(source)
    return {method: compute_inverse(source, n_max, method, kernel=direct) for method in chosen}


def first_disagreement(tables: dict[str, TriangularKernel]) -> tuple[str, str, int, int] | None:
    """First ``(method_a, method_b, n, k)`` where two tables differ, or ``None``."""
    items = list(tables.items())
    if not items:
        return None
    reference_name, reference = items[0]
    for name, table in items[1:]:
        for n, k, value in reference.entries():
            if table.lookup(n, k) != value:
                logger.warning("%s and %s disagree at (%d, %d)", reference_name, name, n, k)
                return reference_name, name, n, k
    return None
