from kernels.management.commands._base import KernelCommand
from kernels.output import OutputDocument
from kernels.triangular import realize


class Command(KernelCommand):
    help = "Print the direct kernel λ1 for rows 0..n_max."

    def add_arguments(self, parser):
        self.add_family_arguments(parser)
        self.add_n_max_argument(parser)
        self.add_format_argument(parser)

    def run(self, **options):
        n_max = self.check_n(options["n_max"])
        source = self.source_from_options(options)
        kernel = realize(source, n_max)
        document = OutputDocument.from_kernel(
            kernel,
            family=self.label_from_options(source, options),
            m=kernel.m,
            n_max=n_max,
            method="direct",
        )
        self.emit(document, options["format"])
