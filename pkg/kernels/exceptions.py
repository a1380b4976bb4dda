"""Domain errors raised by the kernel library.

Every error derives from ``KernelError`` so that callers (the management
commands in particular) can map the whole family to one exit code.
"""
from typing import Iterable


class KernelError(Exception):
    """Base class for every domain failure."""


# --- scalars -------------------------------------------------------------

class ZeroNotInvertible(KernelError):
    def __init__(self, context: str = ""):
        self.context = context
        message = "zero is not invertible"
        if context:
            message = f"{message} ({context})"
        super().__init__(message)


class ScalarSyntaxError(KernelError):
    def __init__(self, text: str):
        self.text = text
        super().__init__(f"not a rational number in p/q form: {text!r}")


# --- expressions ---------------------------------------------------------

class ParseError(KernelError):
    def __init__(self, offset: int, expected: str, source: str = ""):
        self.offset = offset
        self.expected = expected
        self.source = source
        super().__init__(f"parse error at byte {offset}: {expected}")


class UnknownVariable(KernelError):
    def __init__(self, name: str, offset: int):
        self.name = name
        self.offset = offset
        super().__init__(
            f"unknown variable {name!r} at byte {offset}; only 'n' and 'k' are allowed"
        )


class DivisionByZero(KernelError):
    def __init__(self, n: int | None = None, k: int | None = None):
        self.n = n
        self.k = k
        super().__init__(f"division by zero at n={n}, k={k}")


# --- kernels and spec files ----------------------------------------------

class ExprUndefined(KernelError):
    def __init__(self, n: int, k: int, factor: str = ""):
        self.n = n
        self.k = k
        self.factor = factor
        label = f"{factor} " if factor else ""
        super().__init__(f"{label}expression is undefined at n={n}, k={k}")


class RowNotBuilt(KernelError):
    def __init__(self, n: int, n_max: int):
        self.n = n
        self.n_max = n_max
        super().__init__(f"row {n} is not built (kernel holds rows 0..{n_max})")


class BadRowLength(KernelError):
    def __init__(self, n: int, expected: int, actual: int):
        self.n = n
        self.expected = expected
        self.actual = actual
        super().__init__(f"row {n} must hold {expected} entries, got {actual}")


class BadInitialLength(KernelError):
    def __init__(self, m: int, actual: int):
        self.m = m
        self.actual = actual
        super().__init__(f"order m={m} needs {m} initial values, got {actual}")


class PIsKFree(KernelError):
    """The principal factor mentions ``k``; it must be a sequence in ``n`` only."""

    def __init__(self, source: str):
        self.source = source
        super().__init__(f"principal factor must not depend on k: {source!r}")


class SpecFileError(KernelError):
    def __init__(self, detail: str):
        self.detail = detail
        super().__init__(f"invalid spec file: {detail}")


class UnknownFamily(KernelError):
    def __init__(self, name: str, valid: Iterable[str]):
        self.name = name
        self.valid = tuple(valid)
        super().__init__(
            f"unknown family {name!r}; valid names: {', '.join(self.valid)}"
        )


# --- inversion and basis change ------------------------------------------

class NotAdmissible(KernelError):
    def __init__(self, n: int):
        self.n = n
        super().__init__(f"kernel is not admissible: boundary coefficient at n={n} is zero")


class BadResidue(KernelError):
    def __init__(self, r: int, m: int):
        self.r = r
        self.m = m
        super().__init__(f"residue r={r} outside 0..{m - 1}")


class BadDimension(KernelError):
    def __init__(self, n: int, k: int, limit: int):
        self.n = n
        self.k = k
        self.limit = limit
        super().__init__(f"expansion matrix dimension k={k} outside 1..{limit} for n={n}")


class HDependsOnK(KernelError):
    def __init__(self, name: str = ""):
        self.name = name
        label = f"family {name!r}: " if name else ""
        super().__init__(
            f"{label}auxiliary factor depends on k; the recurrence method needs h(n,k) = h(n)"
        )


class PrincipalFactorZero(KernelError):
    def __init__(self, n: int):
        self.n = n
        super().__init__(f"principal factor vanishes at n={n}")


class OrderMismatch(KernelError):
    def __init__(self, m1: int, m2: int):
        self.m1 = m1
        self.m2 = m2
        super().__init__(f"order mismatch: m={m1} vs m={m2}")


class DegreeExceedsBuild(KernelError):
    def __init__(self, degree: int, n_max: int):
        self.degree = degree
        self.n_max = n_max
        super().__init__(f"polynomial degree {degree} exceeds built rows 0..{n_max}")
