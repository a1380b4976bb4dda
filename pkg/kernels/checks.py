"""Invariant battery run by the ``verify`` command.

Every check is exact. A failing check is report content, not an exception;
domain errors raised while building the tables still propagate.
"""
import logging
from dataclasses import dataclass
from typing import Callable, Iterator

from kernels.inversion import (applicable_methods, build_expansion_matrix, compute_all_inverses,
                               determinant_recurrence_rhs, first_disagreement, hessenberg_det,
                               orthogonality_residual, verify_inversion)
from kernels.triangular import (FamilySource, LambdaRecursiveSpec, TriangularKernel,
                                boundary_value, class_view, inverse_class_view, is_admissible,
                                realize, support_width)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str = ""

    def line(self) -> str:
        text = f"{self.name}: {'pass' if self.passed else 'fail'}"
        if self.detail and not self.passed:
            text += f" ({self.detail})"
        return text


def _first_failure(cases: Iterator[str]) -> str:
    return next(cases, "")


def _orthogonality(direct: TriangularKernel, inverse: TriangularKernel, n_max: int) -> str:
    for n in range(n_max + 1):
        for k in range(support_width(n, direct.m) + 1):
            expected = 1 if k == 0 else 0
            if orthogonality_residual(direct, inverse, n, k) != expected:
                return f"n={n}, k={k}"
    return ""


def _reconstruction(direct: TriangularKernel, inverse: TriangularKernel, n_max: int) -> str:
    return _first_failure(
        f"n={n}" for n in range(n_max + 1) if not verify_inversion(direct, inverse, n)
    )


def _determinant_recurrence(spec: LambdaRecursiveSpec, direct: TriangularKernel, n_max: int) -> str:
    for n in range(spec.m + 1, n_max + 1):
        for k in range(1, support_width(n, spec.m) + 1):
            det = hessenberg_det(build_expansion_matrix(direct, n, k))
            if det != determinant_recurrence_rhs(spec, direct, n, k):
                return f"n={n}, k={k}"
    return ""


def _boundary(spec: LambdaRecursiveSpec, direct: TriangularKernel, n_max: int) -> str:
    return _first_failure(
        f"n={n}" for n in range(n_max + 1) if boundary_value(spec, n) != direct.lookup(n, 0)
    )


def class_recurrence_mismatch(spec: LambdaRecursiveSpec, direct: TriangularKernel) -> str:
    """First ``r=.., k=.., t=..`` where a residue class breaks its recurrence, or ``""``."""
    m = spec.m
    views = [class_view(direct, r) for r in range(m)]
    for r, view in enumerate(views):
        if view.k_max >= 0 and view.lookup(0, 0) != spec.initial[r]:
            return f"r={r}, k=0"
        for k in range(1, view.k_max + 1):
            n = m * k + r
            for t in range(k + 1):
                if r >= 1:
                    lower = views[r - 1].lookup(k, t)
                else:
                    lower = views[m - 1].lookup(k - 1, t - 1)
                expected = spec.principal(n) * lower
                if k - t >= 1:
                    expected -= spec.auxiliary(n, k - t) * view.lookup(k - 1, t)
                if view.lookup(k, t) != expected:
                    return f"r={r}, k={k}, t={t}"
    return ""


def class_inversion_mismatch(direct: TriangularKernel, inverse: TriangularKernel) -> str:
    """First ``r=.., k=.., j=..`` where a class pair fails to invert, or ``""``."""
    for r in range(direct.m):
        forward = class_view(direct, r)
        backward = inverse_class_view(inverse, r)
        for k in range(backward.k_max + 1):
            for j in range(1, k + 1):
                total = sum(backward.lookup(k, t) * forward.lookup(k - t, k - j) for t in range(j + 1))
                if total != 0:
                    return f"r={r}, k={k}, j={j}"
    return ""


def _check(name: str, run: Callable[[], str]) -> CheckResult:
    detail = run()
    result = CheckResult(name=name, passed=not detail, detail=detail)
    if not result.passed:
        logger.warning("check failed: %s", result.line())
    return result


def run_battery(source: FamilySource, n_max: int) -> list[CheckResult]:
    direct = realize(source, n_max)
    admissibility = is_admissible(direct)
    results = [CheckResult(
        "admissibility", bool(admissibility),
        "" if admissibility else f"λ1({admissibility.offending},0) = 0",
    )]
    if not admissibility:
        return results

    tables = compute_all_inverses(source, n_max)
    methods = applicable_methods(source)
    inverse = tables[methods[0]]
    spec = source if isinstance(source, LambdaRecursiveSpec) else None

    results.append(_check("orthogonality", lambda: _orthogonality(direct, inverse, n_max)))

    def agreement() -> str:
        clash = first_disagreement(tables)
        return "" if clash is None else "{} vs {} at n={}, k={}".format(*clash)

    results.append(_check(f"method agreement ({', '.join(methods)})", agreement))

    if spec is not None and spec.h_is_k_free:
        results.append(_check("determinant recurrence",
                              lambda: _determinant_recurrence(spec, direct, n_max)))

    for n in range(direct.m, n_max + 1, direct.m):
        matrix = build_expansion_matrix(direct, n - 1, n // direct.m, strict=False)
        det = hessenberg_det(matrix)
        results.append(_check(f"vanishing determinant (n={n})",
                              lambda det=det: "" if det == 0 else f"det={det}"))

    if spec is not None:
        results.append(_check("boundary factorization", lambda: _boundary(spec, direct, n_max)))

    results.append(_check("inversion reconstruction", lambda: _reconstruction(direct, inverse, n_max)))

    if spec is not None:
        results.append(_check("residue class recurrence", lambda: class_recurrence_mismatch(spec, direct)))
    results.append(_check("residue class inversion", lambda: class_inversion_mismatch(direct, inverse)))

    logger.debug("ran %d checks for %s through n=%d", len(results), direct.name, n_max)
    return results


def all_passed(results: list[CheckResult]) -> bool:
    return all(result.passed for result in results)
