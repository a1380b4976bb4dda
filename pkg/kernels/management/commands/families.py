import json

from kernels import catalog
from kernels.inversion import applicable_methods
from kernels.management.commands._base import KernelCommand
from kernels.scalar import render_scalar


class Command(KernelCommand):
    help = "List the built-in families with their recurrence data and applicable inversion methods."

    def add_arguments(self, parser):
        parser.add_argument("--format", choices=("pretty", "json"), default="pretty")

    def run(self, **options):
        records = [
            {
                "name": entry.name,
                "m": entry.m,
                "p": str(entry.spec.p),
                "h": str(entry.spec.h),
                "initial": [render_scalar(c) for c in entry.spec.initial],
                "admissible": entry.admissible,
                "methods": list(applicable_methods(entry.spec)) if entry.admissible else [],
            }
            for entry in catalog.entries()
        ]
        if options["format"] == "json":
            self.stdout.write(json.dumps(records, indent=2, ensure_ascii=False))
            return

        header = ("name", "m", "p", "h", "initial", "admissible", "methods")
        table = [header] + [
            (
                r["name"], str(r["m"]), r["p"], r["h"], ",".join(r["initial"]),
                "yes" if r["admissible"] else "no", ",".join(r["methods"]) or "-",
            )
            for r in records
        ]
        widths = [max(len(row[i]) for row in table) for i in range(len(header))]
        for row in table:
            self.stdout.write("  ".join(cell.ljust(widths[i]) for i, cell in enumerate(row)).rstrip())
