#! /usr/bin/env python

import math
import unittest
import warnings
from fractions import Fraction

import numpy as np

import cartanhartogs as ch
from cartanhartogs.base.exceptions import (DegreeZeroError,
                                           BoundaryAmbiguityWarning)
from cartanhartogs.utils import TestHelper


X = ch.RatPoly.monomial(1)


def small_config():
    """Config with budgets small enough for unit tests."""
    config = ch.Config()
    config.oracle['mc_samples'] = 40000
    config.oracle['mc_batch'] = 10000
    config.oracle['num_random_polys'] = 20
    config.oracle['num_mu_samples'] = 1
    config.kernel['num_pairs'] = 2000
    return config


class MyTest(unittest.TestCase):

    def test_numeric_roots(self):
        """
        Test numeric roots of polynomials with known roots.

        :return: None
        """
        roots = ch.numeric_roots(X * X - 2)
        self.assertEqual(len(roots), 2)
        self.assertAlmostEqual(roots[0], -math.sqrt(2), places=12)
        self.assertAlmostEqual(roots[1], math.sqrt(2), places=12)

        roots = ch.numeric_roots((X - 1) * (X - 2) * (X - 3))
        for r, expected in zip(roots, (1, 2, 3)):
            self.assertAlmostEqual(r, expected, places=12)

        roots = ch.numeric_roots((X - 1) ** 2 * (X + 2) * X ** 2)
        self.assertEqual(len(roots), 5)
        for r, expected in zip(roots, (-2, 0, 0, 1, 1)):
            self.assertAlmostEqual(r, expected, places=12)

        roots = ch.numeric_roots(X * X + 1)
        self.assertAlmostEqual(roots[0], -1j, places=12)
        self.assertAlmostEqual(roots[1], 1j, places=12)
        TestHelper(self).test_raise(lambda: ch.numeric_roots(ch.RatPoly([3])),
                                    DegreeZeroError)

    def test_classify_roots(self):
        """
        Test classification of roots by Re z = 1/2.

        :return: None
        """
        result = ch.classify_roots([0.2, 0.8, 0.3 + 1j, 0.7 - 2j])
        self.assertEqual(result.left, [0.2, 0.3 + 1j])
        self.assertEqual(result.right, [0.8, 0.7 - 2j])
        self.assertEqual(result.ambiguous, [])
        with self.assertWarns(BoundaryAmbiguityWarning):
            result = ch.classify_roots([0.5 + 1.0e-13, 0.1])
        self.assertEqual(len(result.ambiguous), 1)
        self.assertEqual(result.left, [0.1])
        result = ch.classify_roots([0.1, 1.0], center=0.0)
        self.assertEqual(result.right, [0.1, 1.0])

    def test_random_rooted_polynomial(self):
        """
        Test polynomials built from roots at known positions.

        :return: None
        """
        rng = np.random.default_rng(42)
        for degree in range(1, 7):
            p, roots = ch.random_rooted_polynomial(rng, degree)
            self.assertEqual(p.degree, degree)
            self.assertEqual(len(roots), degree)
            scale = sum(abs(float(c)) for c in p.coefficients)
            for r in roots:
                self.assertGreaterEqual(abs(r.real - 0.5), 1.0e-3)
                self.assertLess(abs(p(r)), 1.0e-9 * scale * (1 + abs(r))
                                ** degree)
            self.assertEqual(ch.roots_left_of_half(p).stable,
                             all(r.real < 0.5 for r in roots))
        TestHelper(self).test_raise(
            lambda: ch.random_rooted_polynomial(rng, 0), ValueError)

    def test_hua_integral_mc(self):
        """
        Test Monte-Carlo means of (1-|z|^2)^s over balls.

        :return: None
        """
        est = ch.hua_integral_mc(2, 1.0, samples=40000, seed=5, batch=10000)
        self.assertEqual(est.num_samples, 40000)
        self.assertAlmostEqual(est.exact, 1 / 3)
        self.assertLess(est.deviation, 5.0)
        self.assertGreater(est.stderr, 0.0)
        est = ch.hua_integral_mc(1, 0.0, samples=1000)
        self.assertAlmostEqual(est.estimate, 1.0)
        self.assertEqual(est.deviation, 0.0)
        th = TestHelper(self)
        th.test_raise(lambda: ch.hua_integral_mc(0, 1.0), ValueError)
        th.test_raise(lambda: ch.hua_integral_mc(2, -1.0), ValueError)

    def test_selberg(self):
        """
        Test Selberg quadratures against Gamma products.

        :return: None
        """
        value, _ = ch.selberg_integral(2, 0, 1, 1.0)
        self.assertAlmostEqual(value, 0.5, places=10)
        for a, b, r, s in ((2, 0, 1, 1.0), (2, 1, 1, 0.5), (1, 0, 2, 0.0),
                           (2, 0, 2, 1.0), (1, 0, 2, 2.5)):
            with warnings.catch_warnings():
                warnings.simplefilter("ignore", ch.QuadratureWarning)
                check = ch.selberg_check(a, b, r, s)
            self.assertLess(check.rel_deviation, 1.0e-6,
                            msg=f"{(a, b, r, s)}")
        th = TestHelper(self)
        th.test_raise(lambda: ch.selberg_integral(1, 0, 3, 1.0), ValueError)
        th.test_raise(lambda: ch.selberg_integral(1, 0, 1, -2.0), ValueError)

    def test_suite(self):
        """
        Test the verification suites with small budgets.

        :return: None
        """
        suite = ch.OracleSuite(small_config())
        for result in (suite.run_hua_integrals(), suite.run_selberg(),
                       suite.run_localization(max_degree=5),
                       suite.run_decide_agreement(m_max=2),
                       suite.run_range_lemma()):
            self.assertTrue(result.passed, msg=result.name)
            self.assertEqual(set(result.to_dict().keys()),
                             {"name", "passed", "cases"})
        result = suite.run_range_lemma("I_{1,3}", 1, Fraction(1, 2))
        self.assertEqual(result.cases[0]["num_pairs"], 2000)
        self.assertEqual(result.cases[0]["violations"], 0)
        self.assertEqual(len(suite.run_hua_integrals().cases),
                         len(ch.OracleSuite.mc_cases))


if __name__ == "__main__":
    unittest.main()
