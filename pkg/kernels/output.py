"""Rendering of command results as JSON, CSV or an aligned text table."""
import csv
import io
import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Iterable

from kernels.scalar import render_scalar
from kernels.triangular import TriangularKernel

FORMATS = ("pretty", "json", "csv")


@dataclass
class OutputDocument:
    """Metadata plus rows of scalars already rendered as ``p/q`` text."""

    metadata: dict[str, Any]
    rows: list[tuple[int, tuple[str, ...]]] = field(default_factory=list)
    index_names: tuple[str, str] = ("n", "k")
    extra: dict[str, Any] = field(default_factory=dict)
    notes: list[str] = field(default_factory=list)

    @classmethod
    def from_kernel(cls, kernel: TriangularKernel, **metadata) -> "OutputDocument":
        return cls(metadata=metadata, rows=[(n, render_row(row)) for n, row in enumerate(kernel.rows)])

    def render(self, fmt: str) -> str:
        return RENDERERS[fmt](self)


def render_row(values: Iterable[Fraction]) -> tuple[str, ...]:
    return tuple(render_scalar(v) for v in values)


def render_json(document: OutputDocument) -> str:
    payload = dict(document.metadata)
    payload["rows"] = [list(values) for _, values in document.rows]
    payload.update(document.extra)
    return json.dumps(payload, indent=2, ensure_ascii=False) + "\n"


def render_csv(document: OutputDocument) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow([*document.index_names, "value"])
    for n, values in document.rows:
        for k, value in enumerate(values):
            writer.writerow([n, k, value])
    return buffer.getvalue()


def _metadata_line(metadata: dict[str, Any]) -> str:
    parts = []
    for key, value in metadata.items():
        if value is None:
            continue
        parts.append(f"{key}={value}")
    return "# " + " ".join(parts)


def render_pretty(document: OutputDocument) -> str:
    lines = [_metadata_line(document.metadata)]
    widths: list[int] = []
    for _, values in document.rows:
        for k, value in enumerate(values):
            if k == len(widths):
                widths.append(0)
            widths[k] = max(widths[k], len(value))
    label_width = max((len(str(n)) for n, _ in document.rows), default=1)
    for n, values in document.rows:
        cells = "  ".join(value.rjust(widths[k]) for k, value in enumerate(values))
        lines.append(f"{str(n).rjust(label_width)} | {cells}".rstrip())
    lines.extend(f"# {note}" for note in document.notes)
    return "\n".join(lines) + "\n"


RENDERERS = {
    "json": render_json,
    "csv": render_csv,
    "pretty": render_pretty,
}
