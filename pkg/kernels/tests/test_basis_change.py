from fractions import Fraction as F
from math import gcd

from kernels import catalog
from kernels.basis_change import (CONVOLUTION, RECURRENCE, ChangeTable, Direction, change_by_convolution,
                                  change_by_recurrence, change_cross_order, change_table, combine,
                                  compose_tables, expand_in_basis, reconstruct_change,
                                  reconstruct_cross)
from kernels.exceptions import DegreeExceedsBuild, HDependsOnK, NotAdmissible, OrderMismatch
from kernels.inversion import inverse_by_orthogonality
from kernels.polynomials import Polynomial
from kernels.specfiles import load_spec
from kernels.tests.base import WORKED_EXAMPLE, KernelTestCase
from kernels.tests.factories import KernelFactory, PolynomialFactory, SpecFactory
from kernels.triangular import TriangularKernel, build_direct_kernel, family_polynomial, realize


def direct(name, n_max):
    return build_direct_kernel(catalog.get(name).spec, n_max)


def inverse(name, n_max):
    return inverse_by_orthogonality(direct(name, n_max), n_max)


class ConvolutionTests(KernelTestCase):
    def test_u_to_t_row_two(self):
        table = change_by_convolution(direct("chebyshev-u", 2), inverse("chebyshev-t", 2), 2)
        self.assertIsInstance(table, ChangeTable)
        self.assertEqual(table.direction, Direction.FORWARD)
        self.assertEqual(table.row(2), (F(2), F(1)))

    def test_same_family_gives_identity(self):
        table = change_by_convolution(direct("legendre", 10), inverse("legendre", 10), 10)
        for n, k, value in table.entries():
            self.assertEqual(value, 1 if k == 0 else 0)

    def test_leading_ratio(self):
        table = change_by_convolution(direct("hermite-h", 12), inverse("hermite-he", 12), 12)
        for n in range(13):
            ratio = direct("hermite-h", 12).lookup(n, 0) / direct("hermite-he", 12).lookup(n, 0)
            self.assertEqual(table.lookup(n, 0), ratio)

    def test_u_to_t_reconstruction(self):
        table = change_table(catalog.get("chebyshev-u").spec, catalog.get("chebyshev-t").spec, 20)
        u, t = direct("chebyshev-u", 20), direct("chebyshev-t", 20)
        for n in range(21):
            self.assertPolynomialEqual(reconstruct_change(table, t, n), family_polynomial(u, n))

    def test_random_pairs_reconstruct(self):
        for m in (1, 2, 3):
            f = KernelFactory(m=m, n_max=24, seed=10 + m).create()
            g = KernelFactory(m=m, n_max=24, seed=20 + m).create()
            table = change_by_convolution(f, inverse_by_orthogonality(g, 24), 24)
            for n in range(25):
                self.assertPolynomialEqual(reconstruct_change(table, g, n), family_polynomial(f, n))

    def test_order_mismatch(self):
        with self.assertRaises(OrderMismatch):
            change_by_convolution(direct("chebyshev-t", 4), inverse("laguerre", 4), 4)
        with self.assertRaises(OrderMismatch):
            change_table(catalog.get("chebyshev-t").spec, catalog.get("laguerre").spec, 4)


class RecurrenceTests(KernelTestCase):
    def test_hermite_h_to_hermite_he(self):
        table = change_by_recurrence(catalog.get("hermite-h").spec, catalog.get("hermite-he").spec, 2)
        self.assertEqual(table.row(2), (F(4), F(2)))

    def test_recurrence_equals_convolution(self):
        pairs = [("chebyshev-u", "chebyshev-t"), ("legendre", "chebyshev-t"),
                 ("hermite-h", "hermite-he"), ("lucas", "chebyshev-u")]
        for f, g in pairs:
            with self.subTest(pair=(f, g)):
                spec_f, spec_g = catalog.get(f).spec, catalog.get(g).spec
                self.assertKernelsEqual(
                    TriangularKernel(m=2, rows=change_table(spec_f, spec_g, 16, RECURRENCE).rows),
                    TriangularKernel(m=2, rows=change_table(spec_f, spec_g, 16, CONVOLUTION).rows),
                )

    def test_random_specs(self):
        for m in (1, 2, 3):
            spec_f = SpecFactory(m=m, seed=m).create()
            spec_g = SpecFactory(m=m, seed=m + 30).create()
            by_recurrence = change_by_recurrence(spec_f, spec_g, 14)
            by_convolution = change_table(spec_f, spec_g, 14, CONVOLUTION)
            self.assertEqual(by_recurrence.rows, by_convolution.rows)

    def test_same_family_gives_identity(self):
        spec = catalog.get("chebyshev-t").spec
        table = change_by_recurrence(spec, spec, 10)
        for n, k, value in table.entries():
            self.assertEqual(value, 1 if k == 0 else 0)

    def test_backward_swaps_families(self):
        u, t = catalog.get("chebyshev-u").spec, catalog.get("chebyshev-t").spec
        backward = change_by_recurrence(u, t, 10, Direction.BACKWARD)
        self.assertEqual(backward.direction, Direction.BACKWARD)
        self.assertEqual(backward.rows, change_by_recurrence(t, u, 10).rows)

    def test_k_dependent_auxiliary_factor(self):
        with self.assertRaises(HDependsOnK):
            change_by_recurrence(catalog.get("laguerre").spec, catalog.get("laguerre").spec, 4)
        with self.assertRaises(HDependsOnK):
            change_table(load_spec(WORKED_EXAMPLE), catalog.get("laguerre").spec, 4, RECURRENCE)

    def test_mixed_pair_needs_explicit_convolution(self):
        k_free = SpecFactory(m=1, seed=4).create()
        laguerre = catalog.get("laguerre").spec
        with self.assertRaises(HDependsOnK):
            change_table(k_free, laguerre, 6, RECURRENCE)
        table = change_table(k_free, laguerre, 6, CONVOLUTION)
        self.assertEqual(table.n_max, 6)
        f, g = build_direct_kernel(k_free, 6), build_direct_kernel(laguerre, 6)
        for n in range(7):
            self.assertPolynomialEqual(reconstruct_change(table, g, n), family_polynomial(f, n))

    def test_non_admissible_target(self):
        with self.assertRaises(NotAdmissible):
            change_by_recurrence(catalog.get("lucas").spec, catalog.get("fibonacci").spec, 4)


class RoundTripTests(KernelTestCase):
    def test_forward_then_backward_is_identity(self):
        u, t = catalog.get("chebyshev-u").spec, catalog.get("chebyshev-t").spec
        z = change_table(u, t, 16)
        y = change_table(u, t, 16, direction=Direction.BACKWARD)
        identity = compose_tables(z, y, 16)
        for n, k, value in identity.entries():
            self.assertEqual(value, 1 if k == 0 else 0)


class CrossOrderTests(KernelTestCase):
    def test_chebyshev_t_in_laguerre_basis(self):
        table = change_cross_order(direct("chebyshev-t", 2), inverse("laguerre", 2), 2)
        self.assertEqual(table.values, (F(3), F(-8), F(4)))
        self.assertPolynomialEqual(reconstruct_cross(table, direct("laguerre", 2)),
                                   family_polynomial(direct("chebyshev-t", 2), 2))

    def test_monomial_kernel(self):
        monomials = TriangularKernel.from_rows(3, [[1] + [0] * (n // 3) for n in range(10)])
        mu3 = inverse("legendre", 9)
        table = change_cross_order(monomials, mu3, 9)
        for r in range(10):
            expected = mu3.lookup(9, (9 - r) // 2) if (9 - r) % 2 == 0 else 0
            self.assertEqual(table[r], expected)

    def test_equal_orders_match_change_table(self):
        f, g = direct("chebyshev-u", 12), inverse("chebyshev-t", 12)
        z = change_by_convolution(f, g, 12)
        for n in range(13):
            table = change_cross_order(f, g, n)
            for k in range(n // 2 + 1):
                self.assertEqual(table[n - 2 * k], z.lookup(n, k))

    def test_reconstruction_and_congruence_zeros(self):
        for m1, m2 in ((2, 1), (1, 2), (3, 2)):
            f = KernelFactory(m=m1, n_max=18, seed=m1 * 10 + m2).create()
            g = KernelFactory(m=m2, n_max=18, seed=m2 * 10 + m1).create()
            mu3 = inverse_by_orthogonality(g, 18)
            for n in range(19):
                table = change_cross_order(f, mu3, n)
                self.assertPolynomialEqual(reconstruct_cross(table, g), family_polynomial(f, n))
                for r in table.congruence_zeros():
                    self.assertEqual(table[r], 0)

    def test_catalog_pairs(self):
        for f_name, g_name in (("chebyshev-t", "laguerre"), ("laguerre", "hermite-he")):
            f, g = direct(f_name, 18), direct(g_name, 18)
            mu3 = inverse_by_orthogonality(g, 18)
            for n in range(19):
                table = change_cross_order(f, mu3, n)
                self.assertPolynomialEqual(reconstruct_cross(table, g), family_polynomial(f, n))
                g_cd = gcd(f.m, g.m)
                for r in range(n + 1):
                    if (n - r) % g_cd:
                        self.assertEqual(table[r], 0)


class ExpandInBasisTests(KernelTestCase):
    def test_x_squared_in_chebyshev_t(self):
        coefficients = expand_in_basis(Polynomial([0, 0, 1]), direct("chebyshev-t", 2),
                                       inverse("chebyshev-t", 2))
        self.assertEqual(coefficients, (F(1, 2), F(0), F(1, 2)))

    def test_family_member_gives_unit_vector(self):
        kernel = direct("hermite-he", 8)
        coefficients = expand_in_basis(family_polynomial(kernel, 7), kernel, inverse("hermite-he", 8))
        self.assertEqual(coefficients, tuple(F(int(r == 7)) for r in range(8)))

    def test_zero_polynomial(self):
        self.assertEqual(expand_in_basis(Polynomial(), direct("legendre", 2), inverse("legendre", 2)), ())

    def test_worked_example_constant(self):
        kernel = realize(load_spec(WORKED_EXAMPLE), 6)
        inv = inverse_by_orthogonality(kernel, 6)
        self.assertEqual(expand_in_basis(Polynomial([1]), kernel, inv), (F(1, 7),))
        self.assertEqual(expand_in_basis(Polynomial([7]), kernel, inv), (F(1),))

    def test_degree_beyond_build(self):
        with self.assertRaises(DegreeExceedsBuild):
            expand_in_basis(Polynomial.monomial(5), direct("legendre", 4), inverse("legendre", 4))

    def test_random_polynomials_reconstruct(self):
        for entry in catalog.entries():
            if not entry.admissible:
                continue
            kernel = build_direct_kernel(entry.spec, 16)
            inv = inverse_by_orthogonality(kernel, 16)
            for seed in range(50):
                p = PolynomialFactory(degree=seed % 17, seed=seed).create()
                coefficients = expand_in_basis(p, kernel, inv)
                self.assertPolynomialEqual(combine(coefficients, kernel), p)
