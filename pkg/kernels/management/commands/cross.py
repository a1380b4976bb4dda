from kernels.basis_change import change_cross_order
from kernels.inversion import inverse_by_orthogonality, require_admissible
from kernels.management.commands._base import KernelCommand, family_label, resolve_family
from kernels.output import OutputDocument, render_row
from kernels.triangular import realize


class Command(KernelCommand):
    help = "Print the cross-order coefficients Z(n;r), 0 <= r <= n, between families of any orders."

    def add_arguments(self, parser):
        parser.add_argument("--from", dest="source", required=True, help="family f (order m1)")
        parser.add_argument("--to", dest="target", required=True, help="family g (order m2)")
        parser.add_argument("--n", type=int, required=True)
        self.add_format_argument(parser)

    def run(self, **options):
        n = self.check_n(options["n"], flag="--n")
        source_f = resolve_family(options["source"])
        source_g = resolve_family(options["target"])

        lambda1 = realize(source_f, n)
        require_admissible(lambda1)
        mu3 = inverse_by_orthogonality(realize(source_g, n), n)
        table = change_cross_order(lambda1, mu3, n)

        document = OutputDocument(
            metadata={
                "family": f"{family_label(source_f, options['source'])}->"
                          f"{family_label(source_g, options['target'])}",
                "m": table.m1,
                "m2": table.m2,
                "n": n,
                "method": "cross-order",
            },
            rows=[(n, render_row(table.values))],
            index_names=("n", "r"),
        )
        self.emit(document, options["format"])
