#! /usr/bin/env python

import unittest
from fractions import Fraction

import hypothesis.strategies as st
from hypothesis import example, given, settings

import cartanhartogs as ch
from cartanhartogs.base.exceptions import (DegreeZeroError,
                                           LeadingCoefficientNotPositiveError,
                                           WrongDegreeError)
from cartanhartogs.utils import TestHelper


Z = ch.RatPoly.monomial(1)
HALF = Fraction(1, 2)


class MyTest(unittest.TestCase):

    def test_hurwitz_matrix(self):
        """
        Test Hurwitz matrices and their leading minors.

        :return: None
        """
        p = ch.RatPoly([4, 3, 2, 1])
        self.assertEqual(ch.hurwitz_matrix(p),
                         [[2, 4, 0], [1, 3, 0], [0, 2, 4]])
        self.assertEqual(ch.hurwitz_minors(p), [2, 2, 8])
        th = TestHelper(self)
        th.test_raise(lambda: ch.hurwitz_minors(ch.RatPoly([1])),
                      DegreeZeroError)
        th.test_raise(lambda: ch.hurwitz_minors(ch.RatPoly([1, -1])),
                      LeadingCoefficientNotPositiveError)

    def test_is_stable(self):
        """
        Test the Routh-Hurwitz verdicts and boundary flags.

        :return: None
        """
        report = ch.is_stable(ch.RatPoly([4, 3, 2, 1]))
        self.assertTrue(report.stable)
        self.assertIsNone(report.failed_index)
        self.assertFalse(report.boundary)

        report = ch.is_stable(ch.RatPoly([2, 1, 1, 1]))
        self.assertFalse(report.stable)
        self.assertEqual(report.failed_index, 2)
        self.assertFalse(report.boundary)

        # (z+1)(z^2+1) has roots on the imaginary axis
        report = ch.is_stable((Z + 1) * (Z * Z + 1))
        self.assertFalse(report.stable)
        self.assertEqual(report.failed_index, 2)
        self.assertTrue(report.boundary)

        self.assertTrue(ch.is_stable(ch.RatPoly([1, 1])).stable)
        self.assertFalse(ch.is_stable(ch.RatPoly([-1, 1])).stable)
        self.assertEqual([name for name, _ in report.conditions],
                         ["Delta_1", "Delta_2", "Delta_3"])

    def test_lienard_chipart(self):
        """
        Test the quartic Lienard-Chipart criterion.

        :return: None
        """
        report = ch.lienard_chipart_deg4((Z + 1) ** 4)
        self.assertTrue(report.stable)
        self.assertEqual(report.conditions[-1], ("Delta_3", 64))
        report = ch.lienard_chipart_deg4((Z - 1) * (Z + 1) ** 3)
        self.assertFalse(report.stable)
        TestHelper(self).test_raise(
            lambda: ch.lienard_chipart_deg4((Z + 1) ** 3), WrongDegreeError)

    def test_half_plane_quantities(self):
        """
        Test the closed-form quantities against minors of p(1/2 + z).

        :return: None
        """
        for p in (Z ** 3, Z ** 3 + Z, ch.RatPoly([3, -2, 5, 1]),
                  ch.RatPoly([-1, 7, -3, 2])):
            minors = ch.hurwitz_minors(ch.shift_to_half(p))
            self.assertEqual(ch.half_plane_delta2(*p.coefficients),
                             minors[1])
        for p in (Z ** 4, Z ** 4 + Z, ch.RatPoly([1, 2, 3, 4, 1]),
                  (Z + 1) ** 2 * (Z - 3) * (Z + 5)):
            minors = ch.hurwitz_minors(ch.shift_to_half(p))
            self.assertEqual(ch.half_plane_delta3(*p.coefficients),
                             minors[2])
        quantities = ch.half_plane_quantities([1, 2, 1])
        self.assertEqual(list(quantities.keys()), ["P'(1/2)", "P(1/2)"])
        self.assertEqual(quantities["P(1/2)"], Fraction(9, 4))
        self.assertEqual(quantities["P'(1/2)"], 3)
        TestHelper(self).test_raise(
            lambda: ch.half_plane_quantities([1] * 6), ValueError)

    def test_roots_left_of_half(self):
        """
        Test the strict half-plane test on known roots.

        :return: None
        """
        self.assertTrue(ch.roots_left_of_half((Z - Fraction(1, 4))
                                              * (Z + 1)).stable)
        self.assertFalse(ch.roots_left_of_half(Z - Fraction(3, 4)).stable)
        self.assertTrue(ch.roots_left_of_half(-(Z - Fraction(1, 4))).stable)
        report = ch.roots_left_of_half((Z - HALF) * (Z + 1))
        self.assertFalse(report.stable)
        self.assertTrue(report.boundary)
        # complex pair 0.4 +- 3i stays left
        pair = (Z - Fraction(2, 5)) ** 2 + 9
        self.assertTrue(ch.roots_left_of_half(pair * (Z + 2)).stable)
        self.assertFalse(ch.roots_left_of_half(
            ((Z - Fraction(3, 5)) ** 2 + 9) * (Z + 2)).stable)
        degree6 = ch.RatPoly.from_roots([-1, -2, -3, -4, -5, 0])
        self.assertTrue(ch.roots_left_of_half(degree6).stable)
        self.assertFalse(ch.roots_left_of_half(degree6 * (Z - 1)).stable)
        TestHelper(self).test_raise(
            lambda: ch.roots_left_of_half(ch.RatPoly([2])), DegreeZeroError)

    def test_imaginary_axis_count(self):
        """
        Test the symmetric factor and the count of roots on the axis.

        :return: None
        """
        th = TestHelper(self)
        th.test_equal_poly(ch.symmetric_factor(Z * Z + 1), [1, 0, 1])
        th.test_equal_poly(ch.symmetric_factor((Z + 1) * (Z * Z + 4)),
                           [4, 0, 1])
        th.test_equal_poly(ch.symmetric_factor((Z - 1) * (Z + 1) * (Z + 2)),
                           [-1, 0, 1])
        th.test_equal_poly(ch.symmetric_factor(Z + 1), [1])
        self.assertEqual(ch.imaginary_axis_count(Z * Z + 1), 2)
        self.assertEqual(ch.imaginary_axis_count((Z + 1) * (Z * Z + 4)), 2)
        self.assertEqual(ch.imaginary_axis_count(Z + 1), 0)
        self.assertEqual(ch.imaginary_axis_count(Z ** 3), 3)
        self.assertEqual(ch.imaginary_axis_count(
            Z * (Z * Z + 1) ** 2 * (Z - 3)), 5)
        # +-1 and +-2 are mirrored pairs off the axis
        self.assertEqual(ch.imaginary_axis_count((Z * Z - 1) * (Z * Z - 4)),
                         0)
        # z^6 = -2 has two of its six roots on the axis
        self.assertEqual(ch.imaginary_axis_count(Z ** 6 + 2), 2)
        # z^4 + 1 has its roots at odd multiples of 45 degrees
        self.assertEqual(ch.imaginary_axis_count(Z ** 4 + 1), 0)

    def test_closed_half_plane(self):
        """
        Test the closed test with roots on Re z = 1/2.

        :return: None
        """
        report = ch.closed_half_plane_test((Z - HALF) * (Z + 1))
        self.assertTrue(report.no_right_roots)
        self.assertEqual(report.boundary_roots, 1)
        report = ch.closed_half_plane_test(((Z - HALF) ** 2 + 1) * (Z + 2))
        self.assertTrue(report.no_right_roots)
        self.assertEqual(report.boundary_roots, 2)
        report = ch.closed_half_plane_test(((Z - HALF) ** 2 + 1) * (Z - 2))
        self.assertFalse(report.no_right_roots)
        report = ch.closed_half_plane_test((Z - HALF) ** 3)
        self.assertTrue(report.no_right_roots)
        self.assertEqual(report.boundary_roots, 3)
        self.assertIsNone(report.reduced)
        self.assertFalse(ch.closed_half_plane_test(Z - 1).no_right_roots)

    def test_closed_half_plane_mirrored(self):
        """
        Test roots rho and 1 - rho on both sides of Re z = 1/2.

        :return: None
        """
        report = ch.closed_half_plane_test(Z * (Z - 1))
        self.assertFalse(report.no_right_roots)
        self.assertEqual(report.boundary_roots, 0)
        self.assertEqual(report.mirrored_roots, 1)
        self.assertIsNone(report.reduced)
        report = ch.closed_half_plane_test((Z + 1) * (Z - 2))
        self.assertFalse(report.no_right_roots)
        self.assertEqual(report.mirrored_roots, 1)
        # 1920 eta^4 - 1920 eta^3 + 360 eta^2, roots 0, 0, 1/4, 3/4
        p = ch.RatPoly([0, 0, 360, -1920, 1920])
        report = ch.closed_half_plane_test(p)
        self.assertFalse(report.no_right_roots)
        self.assertEqual(report.mirrored_roots, 1)
        self.assertEqual(report.boundary_roots, 0)
        # mirrored complex pair 1/2 +- 1 +- i
        quad = (((Z - Fraction(3, 2)) ** 2 + 1)
                * ((Z + Fraction(1, 2)) ** 2 + 1))
        report = ch.closed_half_plane_test(quad * (Z + 3))
        self.assertFalse(report.no_right_roots)
        self.assertEqual(report.mirrored_roots, 2)
        # a double root on the line is not mirrored
        report = ch.closed_half_plane_test((Z - HALF) ** 2 * (Z + 1))
        self.assertTrue(report.no_right_roots)
        self.assertEqual(report.boundary_roots, 2)

    def test_cubic_quantities(self):
        """
        Test the cubic quantities P(1/2), P'(1/2) and Delta_2 on IV_3.

        :return: None
        """
        spec = ch.catalog_lookup("IV_3")
        for m in (1, 2, 4):
            for mu in (Fraction(1, 2), Fraction(1), Fraction(3)):
                p = ch.representative_polynomial(spec, m).at_mu(mu)
                quantities = ch.half_plane_quantities(p.coefficients)
                self.assertEqual(list(quantities.keys()),
                                 ["P(1/2)", "P'(1/2)", "Delta_2"])
                self.assertEqual(quantities["P(1/2)"],
                                 ch.q_poly(spec, m)(mu))
                self.assertEqual(quantities["P'(1/2)"],
                                 ch.derivative_at_half(spec, m, 1)(mu))
                self.assertEqual(quantities["Delta_2"],
                                 ch.hurwitz_quantity(spec, m)(mu))
                self.assertEqual(quantities["P(1/2)"], p(HALF))
                self.assertEqual(quantities["P'(1/2)"], p.derivative()(HALF))
        # q_1 = 3 (8 - 6 mu^2) / 8
        p = ch.representative_polynomial(spec, 1).at_mu(1)
        report = ch.roots_left_of_half(p)
        self.assertTrue(report.stable)
        self.assertEqual([name for name, _ in report.conditions],
                         ["P(1/2)", "P'(1/2)", "Delta_2"])
        self.assertEqual(report.conditions[0][1], Fraction(3, 4))

    @settings(deadline=None, max_examples=80)
    @given(st.lists(st.fractions(min_value=-5, max_value=5,
                                 max_denominator=8),
                    min_size=1, max_size=6),
           st.integers(-3, 3).filter(lambda x: x != 0))
    @example([0, 1], 1)
    @example([Fraction(1, 4), Fraction(3, 4), 0, 0], 1)
    def test_real_roots(self, roots, leading):
        """
        Test both half-plane tests on polynomials with real roots.

        :return: None
        """
        p = ch.RatPoly.from_roots(roots, leading)
        self.assertEqual(ch.roots_left_of_half(p).stable,
                         max(roots) < HALF)
        report = ch.closed_half_plane_test(p)
        self.assertEqual(report.no_right_roots, max(roots) <= HALF)
        self.assertEqual(report.boundary_roots, roots.count(HALF))
        mirrored = sum(min(roots.count(r), roots.count(1 - r))
                       for r in set(roots) if r > HALF)
        self.assertEqual(report.mirrored_roots, mirrored)


if __name__ == "__main__":
    unittest.main()
