import logging
from pathlib import Path

from django.conf import settings
from django.core.management.base import BaseCommand, CommandError

from kernels import catalog
from kernels.exceptions import KernelError, UnknownFamily
from kernels.output import FORMATS, OutputDocument
from kernels.specfiles import load_spec
from kernels.triangular import FamilySource

logger = logging.getLogger("kernels")


def resolve_family(value: str) -> FamilySource:
    """A catalog name, or a path to a JSON spec file."""
    if value in catalog.names():
        return catalog.get(value).spec
    if value.endswith(".json") or Path(value).is_file():
        return load_spec(value)
    raise UnknownFamily(value, catalog.names())


def family_label(source: FamilySource, fallback: str) -> str:
    return source.name or Path(fallback).stem


class KernelCommand(BaseCommand):
    """Shared flags and error mapping for the kernel commands.

    Subclasses implement ``run(**options)``; any ``KernelError`` becomes a
    ``CommandError`` with exit code 1.
    """

    def add_family_arguments(self, parser):
        group = parser.add_mutually_exclusive_group(required=True)
        group.add_argument("--family", help="catalog family name")
        group.add_argument("--spec", help="path to a JSON spec file")

    def add_format_argument(self, parser):
        parser.add_argument("--format", choices=FORMATS, default="pretty")

    def add_n_max_argument(self, parser, default: int = 8):
        parser.add_argument("--n-max", type=int, default=default, dest="n_max")

    def source_from_options(self, options) -> FamilySource:
        if options.get("family"):
            return resolve_family(options["family"])
        return load_spec(options["spec"])

    def label_from_options(self, source: FamilySource, options) -> str:
        return family_label(source, options.get("family") or options.get("spec") or "")

    def check_n(self, value: int, flag: str = "--n-max") -> int:
        limit = settings.TRIKERNEL_MAX_N
        if value < 0 or value > limit:
            raise CommandError(f"{flag} must be between 0 and {limit}, got {value}", returncode=2)
        return value

    def emit(self, document: OutputDocument, fmt: str):
        self.stdout.write(document.render(fmt), ending="")

    def handle(self, *args, **options):
        level = logger.level
        if options.get("verbosity", 1) >= 2:
            logger.setLevel(logging.DEBUG)
        try:
            return self.run(**options)
        except KernelError as exc:
            logger.error("%s failed: %s", self.__module__.rsplit(".", 1)[-1], exc)
            raise CommandError(str(exc), returncode=1) from exc
        finally:
            logger.setLevel(level)

    def run(self, **options):
        raise NotImplementedError
