from django.core.management.base import CommandError

from kernels import catalog
from kernels.checks import all_passed, run_battery
from kernels.management.commands._base import KernelCommand


class Command(KernelCommand):
    help = "Run the invariant battery and print one 'name: pass|fail' line per check."

    def add_arguments(self, parser):
        group = parser.add_mutually_exclusive_group(required=True)
        group.add_argument("--family", help="catalog family name")
        group.add_argument("--spec", help="path to a JSON spec file")
        group.add_argument("--all-families", action="store_true",
                           help="every admissible catalog family, in catalog order")
        self.add_n_max_argument(parser, default=12)

    def run(self, **options):
        n_max = self.check_n(options["n_max"])
        if options["all_families"]:
            passed = True
            for entry in catalog.entries():
                if not entry.admissible:
                    continue
                results = run_battery(entry.spec, n_max)
                for result in results:
                    self.stdout.write(f"[{entry.name}] {result.line()}")
                passed = passed and all_passed(results)
        else:
            results = run_battery(self.source_from_options(options), n_max)
            for result in results:
                self.stdout.write(result.line())
            passed = all_passed(results)

        if not passed:
            raise CommandError("verification failed", returncode=1)
