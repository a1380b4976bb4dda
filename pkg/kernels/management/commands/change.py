from kernels.basis_change import CHANGE_METHODS, CONVOLUTION, Direction, change_table
from kernels.management.commands._base import KernelCommand, family_label, resolve_family
from kernels.output import OutputDocument


class Command(KernelCommand):
    help = "Print the change-of-basis table z (f to g), or y (g to f) with --reverse."

    def add_arguments(self, parser):
        parser.add_argument("--from", dest="source", required=True, help="family f")
        parser.add_argument("--to", dest="target", required=True, help="family g")
        self.add_n_max_argument(parser)
        parser.add_argument("--method", choices=CHANGE_METHODS, default=CONVOLUTION)
        parser.add_argument("--reverse", action="store_true", help="emit y (g to f) instead of z")
        self.add_format_argument(parser)

    def run(self, **options):
        n_max = self.check_n(options["n_max"])
        source_f = resolve_family(options["source"])
        source_g = resolve_family(options["target"])
        direction = Direction.BACKWARD if options["reverse"] else Direction.FORWARD
        table = change_table(source_f, source_g, n_max, options["method"], direction)

        label_f = family_label(source_f, options["source"])
        label_g = family_label(source_g, options["target"])
        document = OutputDocument.from_kernel(
            table,
            family=f"{label_f}->{label_g}",
            m=table.m,
            n_max=n_max,
            method=options["method"],
            direction=direction.value,
        )
        self.emit(document, options["format"])
