from django.core.management.base import CommandError

from kernels.inversion import (METHODS, applicable_methods, compute_all_inverses, compute_inverse,
                               first_disagreement)
from kernels.management.commands._base import KernelCommand
from kernels.output import OutputDocument


class Command(KernelCommand):
    help = "Print the inverse kernel λ3 computed by one method, or by all applicable methods."

    def add_arguments(self, parser):
        self.add_family_arguments(parser)
        self.add_n_max_argument(parser)
        parser.add_argument("--method", choices=METHODS + ("all",), default="orthogonality")
        self.add_format_argument(parser)

    def run(self, **options):
        n_max = self.check_n(options["n_max"])
        source = self.source_from_options(options)
        label = self.label_from_options(source, options)
        method = options["method"]

        if method != "all":
            inverse = compute_inverse(source, n_max, method)
            document = OutputDocument.from_kernel(inverse, family=label, m=inverse.m,
                                                  n_max=n_max, method=method)
            self.emit(document, options["format"])
            return

        methods = applicable_methods(source)
        tables = compute_all_inverses(source, n_max, methods)
        inverse = tables[methods[0]]
        clash = first_disagreement(tables)
        document = OutputDocument.from_kernel(inverse, family=label, m=inverse.m,
                                              n_max=n_max, method="all")
        document.extra["consistency"] = {
            "methods": list(methods),
            "agreed": clash is None,
        }
        if clash is None:
            document.notes.append(f"consistency: {' = '.join(methods)}: agreed")
        else:
            a, b, n, k = clash
            document.extra["consistency"]["first_disagreement"] = {"methods": [a, b], "n": n, "k": k}
            document.notes.append(f"consistency: {a} and {b} disagree at n={n}, k={k}")
        self.emit(document, options["format"])
        if clash is not None:
            raise CommandError("inversion methods disagree", returncode=1)
