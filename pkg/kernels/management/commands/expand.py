from kernels.basis_change import combine, expand_in_basis
from kernels.exceptions import ParseError, ScalarSyntaxError
from kernels.inversion import METHODS, ORTHOGONALITY, compute_inverse, require_admissible
from kernels.management.commands._base import KernelCommand
from kernels.output import OutputDocument, render_row
from kernels.polynomials import Polynomial
from kernels.scalar import parse_scalar
from kernels.triangular import realize


def parse_coefficients(text: str) -> Polynomial:
    """``"c0,c1,..."``, lowest degree first."""
    coeffs = []
    start = 0
    for part in text.split(","):
        try:
            if not part.strip():
                raise ScalarSyntaxError(part)
            coeffs.append(parse_scalar(part))
        except ScalarSyntaxError as exc:
            token = start + len(part) - len(part.lstrip())
            raise ParseError(len(text[:token].encode("utf-8")), "Expected a rational p/q", text) from exc
        start += len(part) + 1
    return Polynomial(coeffs)


class Command(KernelCommand):
    help = "Expand a polynomial given by monomial coefficients in a family basis."

    def add_arguments(self, parser):
        parser.add_argument("--poly", required=True, help='coefficients low to high, e.g. "0,0,1"')
        self.add_family_arguments(parser)
        parser.add_argument("--method", choices=METHODS, default=ORTHOGONALITY,
                            help="how to compute the inverse kernel")
        self.add_format_argument(parser)

    def run(self, **options):
        polynomial = parse_coefficients(options["poly"])
        source = self.source_from_options(options)
        degree = self.check_n(max(polynomial.degree, 0), flag="degree of --poly")

        direct = realize(source, degree)
        require_admissible(direct)
        if polynomial.is_zero():
            coefficients = ()
        else:
            inverse = compute_inverse(source, degree, options["method"], kernel=direct)
            coefficients = expand_in_basis(polynomial, direct, inverse)
        verified = combine(coefficients, direct) == polynomial

        document = OutputDocument(
            metadata={
                "family": self.label_from_options(source, options),
                "m": direct.m,
                "n_max": polynomial.degree if not polynomial.is_zero() else None,
                "method": options["method"],
            },
            rows=[(polynomial.degree, render_row(coefficients))] if coefficients else [],
            index_names=("n", "r"),
            extra={"verified": verified},
            notes=[f"verified: {'true' if verified else 'false'}"],
        )
        self.emit(document, options["format"])
