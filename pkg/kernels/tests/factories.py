from dataclasses import dataclass
from fractions import Fraction

from faker import Faker

from kernels.inversion import ExpansionMatrix
from kernels.polynomials import Polynomial
from kernels.scalar import ZERO
from kernels.triangular import LambdaRecursiveSpec, TriangularKernel, support_width


def _faker(seed: int) -> Faker:
    fake = Faker()
    fake.seed_instance(seed)
    return fake


def random_scalar(fake: Faker, nonzero: bool = False, span: int = 9) -> Fraction:
    while True:
        value = Fraction(fake.random_int(-span, span), fake.random_int(1, 4))
        if value != 0 or not nonzero:
            return value


@dataclass
class KernelFactory:
    """Random admissible explicit kernel: boundary column never zero."""

    m: int = 1
    n_max: int = 8
    seed: int = 0

    def create(self) -> TriangularKernel:
        fake = _faker(self.seed)
        rows = []
        for n in range(self.n_max + 1):
            row = [random_scalar(fake, nonzero=True)]
            row += [random_scalar(fake) for _ in range(support_width(n, self.m))]
            rows.append(row)
        return TriangularKernel.from_rows(self.m, rows, name=f"random-{self.m}-{self.seed}")


@dataclass
class SpecFactory:
    """Random lambda-recursive spec with constant, non-zero principal and auxiliary factors."""

    m: int = 2
    seed: int = 0

    def create(self) -> LambdaRecursiveSpec:
        fake = _faker(self.seed)
        initial = [random_scalar(fake, nonzero=True) for _ in range(self.m)]
        p = fake.random_int(1, 5) * fake.random_element((1, -1))
        h = fake.random_int(1, 5) * fake.random_element((1, -1))
        return LambdaRecursiveSpec.from_text(
            m=self.m, initial=initial, p=str(p), h=str(h), name=f"spec-{self.m}-{self.seed}",
        )


@dataclass
class HessenbergFactory:
    size: int = 3
    seed: int = 0

    def create(self) -> ExpansionMatrix:
        fake = _faker(self.seed)
        entries = tuple(
            tuple(random_scalar(fake, span=5) if j <= i + 1 else ZERO for j in range(1, self.size + 1))
            for i in range(1, self.size + 1)
        )
        return ExpansionMatrix(n=0, k=self.size, entries=entries)


@dataclass
class PolynomialFactory:
    degree: int = 4
    seed: int = 0

    def create(self) -> Polynomial:
        fake = _faker(self.seed)
        coeffs = [random_scalar(fake) for _ in range(self.degree)]
        return Polynomial(coeffs + [random_scalar(fake, nonzero=True)])


@dataclass
class ArrayFactory:
    """Random finite family ``a(j, k)`` over ``0 <= j, k <= size``."""

    size: int = 10
    seed: int = 0

    def create(self):
        fake = _faker(self.seed)
        table = {
            (j, k): random_scalar(fake)
            for j in range(self.size + 1) for k in range(self.size + 1)
        }
        return lambda j, k: table[(j, k)]
