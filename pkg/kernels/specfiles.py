"""JSON spec files describing a family.

Two variants are accepted::

    {"name": "chebyshev-t", "m": 2, "initial": ["1", "1"], "p": "2", "h": "1"}
    {"name": "worked-example", "m": 1, "table": [["7"], ["-6", "6"]]}
"""
import json
import logging
from pathlib import Path

from pydantic import BaseModel, ConfigDict, Field, ValidationError

from kernels.exceptions import ParseError, SpecFileError
from kernels.scalar import parse_scalar
from kernels.triangular import LambdaRecursiveSpec, TableSpec, TriangularKernel

logger = logging.getLogger(__name__)


class _SpecModel(BaseModel):
    model_config = ConfigDict(extra="forbid", str_strip_whitespace=True)

    name: str | None = None
    m: int = Field(ge=1)


class LambdaRecursiveModel(_SpecModel):
    initial: list[str]
    p: str
    h: str

    def to_spec(self) -> LambdaRecursiveSpec:
        return LambdaRecursiveSpec.from_text(
            m=self.m,
            initial=[parse_scalar(c) for c in self.initial],
            p=self.p,
            h=self.h,
            name=self.name or "",
        )


class TableModel(_SpecModel):
    table: list[list[str]] = Field(min_length=1)

    def to_spec(self) -> TableSpec:
        rows = [[parse_scalar(v) for v in row] for row in self.table]
        kernel = TriangularKernel.from_rows(self.m, rows, name=self.name or "")
        return TableSpec(kernel=kernel, name=self.name or "")


def _read(path_or_text: str | Path) -> str:
    if isinstance(path_or_text, Path):
        return path_or_text.read_text(encoding="utf-8")
    if path_or_text.lstrip().startswith("{"):
        return path_or_text
    path = Path(path_or_text)
    try:
        return path.read_text(encoding="utf-8")
    except OSError as exc:
        raise SpecFileError(f"cannot read {path}: {exc.strerror}") from exc


def load_spec(path_or_text: str | Path) -> LambdaRecursiveSpec | TableSpec:
    """Parse and validate a spec file given by path or by its JSON text."""
    text = _read(path_or_text)
    try:
        document = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(len(text[:exc.pos].encode("utf-8")), exc.msg, text) from exc

    if not isinstance(document, dict):
        raise SpecFileError("top level must be a JSON object")

    model_class = TableModel if "table" in document else LambdaRecursiveModel
    try:
        model = model_class.model_validate(document)
    except ValidationError as exc:
        first = exc.errors()[0]
        location = ".".join(str(part) for part in first["loc"]) or "<root>"
        raise SpecFileError(f"{location}: {first['msg']}") from exc

    spec = model.to_spec()
    logger.debug("loaded %s spec %r (m=%d)", model_class.__name__, spec.name, spec.m)
    return spec
