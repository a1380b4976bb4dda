"""Built-in lambda-recursive families.

Entries use the minus-sign convention
``λ1(n,k) = p_n λ1(n-1,k) - h(n,k) λ1(n-m,k-1)`` verbatim. With ``h = 1`` this
gives alternating-sign triangles for Fibonacci and Lucas, and Fibonacci's
``c_0 = 0`` makes it non-admissible.
"""
import logging
from dataclasses import dataclass
from functools import lru_cache

from django.conf import settings

from kernels.exceptions import UnknownFamily
from kernels.triangular import LambdaRecursiveSpec, build_direct_kernel, is_admissible

logger = logging.getLogger(__name__)

DEFAULT_HORIZON = 64

# name, m, p, h, initial values
_TABLE = (
    ("laguerre", 1, "-1/n", "(k-2*n)/n", ("1",)),
    ("chebyshev-t", 2, "2", "1", ("1", "1")),
    ("chebyshev-u", 2, "2", "1", ("1", "2")),
    ("legendre", 2, "(2*n-1)/n", "(n-1)/n", ("1", "1")),
    ("hermite-h", 2, "2", "2*n-2", ("1", "2")),
    ("hermite-he", 2, "1", "n-1", ("1", "1")),
    ("lucas", 2, "1", "1", ("2", "1")),
    ("fibonacci", 2, "1", "1", ("0", "1")),
)


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    spec: LambdaRecursiveSpec
    admissible: bool
    recurrence_methods_ok: bool

    @property
    def m(self) -> int:
        return self.spec.m


def admissibility_horizon() -> int:
    if settings.configured:
        return getattr(settings, "TRIKERNEL_ADMISSIBILITY_HORIZON", DEFAULT_HORIZON)
    return DEFAULT_HORIZON


def _make_entry(name, m, p, h, initial, horizon: int) -> CatalogEntry:
    spec = LambdaRecursiveSpec.from_text(m=m, initial=initial, p=p, h=h, name=name)
    admissible = bool(is_admissible(build_direct_kernel(spec, horizon)))
    return CatalogEntry(
        name=name,
        spec=spec,
        admissible=admissible,
        recurrence_methods_ok=spec.h_is_k_free,
    )


@lru_cache(maxsize=None)
def _entries(horizon: int) -> tuple[CatalogEntry, ...]:
    logger.debug("building catalog metadata over %d rows", horizon)
    return tuple(_make_entry(*row, horizon=horizon) for row in _TABLE)


def entries() -> tuple[CatalogEntry, ...]:
    return _entries(admissibility_horizon())


def names() -> tuple[str, ...]:
    return tuple(row[0] for row in _TABLE)


def get(name: str) -> CatalogEntry:
    for entry in entries():
        if entry.name == name:
            return entry
    raise UnknownFamily(name, names())
