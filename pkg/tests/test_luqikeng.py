#! /usr/bin/env python

import math
import unittest
from fractions import Fraction

import cartanhartogs as ch
from cartanhartogs.base.exceptions import (MuNotPositiveError,
                                           BoundaryMuError)
from cartanhartogs.utils import TestHelper


class MyTest(unittest.TestCase):

    def test_is_classified(self):
        """
        Test the set of domains decided through q_m.

        :return: None
        """
        for name in ("I_{1,1}", "I_{1,2}", "I_{1,3}", "I_{1,4}", "IV_3",
                     "IV_4", "III_2", "I_{2,2}", "II_3"):
            self.assertTrue(ch.is_classified(ch.catalog_lookup(name)), name)
        for name in ("I_{1,5}", "IV_5", "I_{2,3}"):
            self.assertFalse(ch.is_classified(ch.catalog_lookup(name)), name)
        self.assertFalse(ch.is_classified(ch.DomainSpec(0, 0, 2)))

    def test_decide(self):
        """
        Test Lu Qikeng decisions on both sides of thresholds.

        :return: None
        """
        th = TestHelper(self)
        verdict = ch.decide(ch.catalog_lookup("I_{1,2}"), 2, 4)
        self.assertTrue(verdict.is_lu_qikeng)
        self.assertTrue(verdict.boundary)
        self.assertEqual(verdict.mu, 4)
        self.assertIn(("q_m(mu)", "0"), verdict.method)

        verdict = ch.decide(ch.catalog_lookup("I_{1,2}"), 2, "4.001")
        self.assertFalse(verdict.is_lu_qikeng)
        self.assertFalse(verdict.boundary)
        self.assertTrue(ch.decide(ch.catalog_lookup("I_{1,2}"), 2,
                                  "3.999").is_lu_qikeng)

        self.assertFalse(ch.decide(ch.catalog_lookup("IV_4"), 7,
                                   7).is_lu_qikeng)
        self.assertTrue(ch.decide(ch.catalog_lookup("IV_4"), 7,
                                  "6.9").is_lu_qikeng)
        self.assertTrue(ch.decide(ch.catalog_lookup("I_{1,1}"), 1,
                                  1000000).is_lu_qikeng)
        self.assertTrue(ch.decide(ch.catalog_lookup("I_{1,2}"), 3,
                                  1000).is_lu_qikeng)
        self.assertFalse(ch.decide(ch.catalog_lookup("I_{1,3}"), 1,
                                   2).is_lu_qikeng)
        self.assertTrue(ch.decide(ch.catalog_lookup("I_{1,3}"), 1,
                                  "1.41").is_lu_qikeng)

        # beyond the second root of q_1 the domain stays non Lu Qikeng
        spec = ch.catalog_lookup("I_{1,4}")
        self.assertFalse(ch.decide(spec, 1, 2).is_lu_qikeng)
        verdict = ch.decide(spec, 1, 4)
        self.assertFalse(verdict.is_lu_qikeng)
        self.assertFalse(verdict.boundary)
        self.assertFalse(ch.decide(spec, 1, 5).is_lu_qikeng)

        th.test_raise(lambda: ch.decide(spec, 1, 0), MuNotPositiveError)
        th.test_raise(lambda: ch.decide(spec, 1, "-1/2"), MuNotPositiveError)
        th.test_raise(lambda: ch.decide(spec, 0, 1), ValueError)

    def test_mirrored_right_roots(self):
        """
        Test I_{1,4} with m = 1, where P_mu^1 has roots rho and 1 - rho.

        :return: None
        """
        spec = ch.catalog_lookup("I_{1,4}")
        # P_2^1 = 1920 eta^4 - 1920 eta^3 + 360 eta^2
        p = ch.representative_polynomial(spec, 1).at_mu(2)
        self.assertEqual(p.monic(), ch.RatPoly.from_roots(
            [0, 0, Fraction(1, 4), Fraction(3, 4)]))
        for mu, expected in ((1, 0), (2, 1), (3, 1), (5, 2)):
            verdict = ch.decide(spec, 1, mu, count_roots=True)
            self.assertEqual(verdict.is_lu_qikeng, expected == 0, mu)
            self.assertFalse(verdict.boundary)
            self.assertEqual(verdict.right_halfplane_root_count, expected)
            count = ch.halfplane_root_count(spec, 1, mu)
            self.assertEqual(count.count, expected, mu)
            self.assertEqual(count.ambiguous, 0)
        count = ch.halfplane_root_count(spec, 1, 2)
        self.assertTrue(count.all_real)
        self.assertAlmostEqual(count.roots[0].real, 0.75, places=9)
        self.assertAlmostEqual(count.roots[0].imag, 0.0, places=9)

    def test_decide_generic_path(self):
        """
        Test the closed half-plane path of domains outside the classified
        ones.

        :return: None
        """
        spec = ch.catalog_lookup("I_{2,3}")
        for mu in (Fraction(1, 10), 1, 3):
            verdict = ch.decide(spec, 1, mu)
            p = ch.representative_polynomial(spec, 1).at_mu(mu)
            self.assertEqual(verdict.is_lu_qikeng,
                             ch.closed_half_plane_test(p).no_right_roots)
            self.assertIn(("path", "closed half-plane test"),
                          verdict.method)

    def test_decide_count_roots(self):
        """
        Test the optional numeric root count of decide.

        :return: None
        """
        spec = ch.catalog_lookup("IV_4")
        verdict = ch.decide(spec, 1, 2, count_roots=True)
        self.assertEqual(verdict.right_halfplane_root_count, 1)
        verdict = ch.decide(spec, 1, Fraction(1, 2), count_roots=True)
        self.assertEqual(verdict.right_halfplane_root_count, 0)
        verdict = ch.decide(spec, 1, 2)
        self.assertEqual(verdict.right_halfplane_root_count, -1)

    def test_halfplane_root_count(self):
        """
        Test counting of roots in Re eta > 1/2.

        :return: None
        """
        spec = ch.catalog_lookup("IV_4")
        for mu, expected in ((Fraction(1, 2), 0), (2, 1), (5, 2)):
            count = ch.halfplane_root_count(spec, 1, mu)
            self.assertEqual(count.count, expected)
            self.assertEqual(count.ambiguous, 0)
            for root in count.roots:
                self.assertGreater(root.real, 0.5)
            # a single root off the line has no conjugate partner
            if expected <= 1:
                self.assertTrue(count.all_real)
        self.assertGreaterEqual(
            ch.halfplane_root_count(ch.catalog_lookup("I_{1,3}"), 1,
                                    2).count, 1)
        th = TestHelper(self)
        th.test_raise(lambda: ch.halfplane_root_count(
            ch.catalog_lookup("I_{1,4}"), 1, 4), BoundaryMuError)
        th.test_raise(lambda: ch.halfplane_root_count(spec, 1, 0),
                      MuNotPositiveError)

    def test_threshold(self):
        """
        Test isolation and refinement of the positive roots of q_m.

        :return: None
        """
        tol = Fraction(1, 10**9)
        report = ch.threshold(ch.catalog_lookup("I_{1,2}"), 1, tol)
        self.assertEqual(report.positive_root_count, 1)
        self.assertLess(abs(report.mu_m_1.value - 2), tol)
        self.assertIsNone(report.mu_m_2)
        self.assertTrue(report.verified_sufficient)

        report = ch.threshold(ch.catalog_lookup("I_{1,2}"), 5)
        self.assertIsNone(report.mu_m_1)
        self.assertEqual(report.roots, [])
        self.assertTrue(report.verified_sufficient)

        report = ch.threshold(ch.catalog_lookup("I_{1,4}"), 1)
        self.assertEqual(report.positive_root_count, 2)
        self.assertLess(abs(report.mu_m_2.value - 4), report.tol)
        self.assertTrue(report.verified_sufficient)

        report = ch.threshold(ch.catalog_lookup("I_{1,4}"), 2)
        self.assertAlmostEqual(float(report.mu_m_1), 1.41518, delta=5.0e-5)
        self.assertAlmostEqual(float(report.mu_m_2), 11.333024, delta=1.0e-5)
        self.assertTrue(report.mu_m_1.interval.contains(report.mu_m_1.value))

        report = ch.threshold(ch.catalog_lookup("I_{1,4}"), 3)
        self.assertAlmostEqual(float(report.mu_m_1), 1.68819, delta=5.0e-5)

        report = ch.threshold(ch.catalog_lookup("IV_4"), 1)
        self.assertAlmostEqual(float(report.mu_m_1),
                               math.sqrt(23 - math.sqrt(337)) / 2,
                               delta=1.0e-9)
        self.assertAlmostEqual(float(report.mu_m_2),
                               math.sqrt(23 + math.sqrt(337)) / 2,
                               delta=1.0e-9)

        report = ch.threshold(ch.catalog_lookup("I_{2,3}"), 1)
        self.assertIsInstance(report.verified_sufficient, bool)
        TestHelper(self).test_raise(
            lambda: ch.threshold(ch.catalog_lookup("IV_3"), 0), ValueError)

    def test_m_omega(self):
        """
        Test the integer m_Omega of the classified domains.

        :return: None
        """
        for name, expected in (("I_{1,1}", 1), ("I_{1,2}", 3),
                               ("I_{1,3}", 6), ("IV_3", 6), ("I_{1,4}", 8),
                               ("IV_4", 8)):
            spec = ch.catalog_lookup(name)
            report = ch.m_omega(spec)
            self.assertEqual(report.m_omega, expected, msg=name)
            self.assertTrue(report.proven, msg=name)
            self.assertEqual(ch.published_m_omega(spec), expected)
        spec = ch.catalog_lookup("I_{1,2}")
        self.assertTrue(ch.q_positive_for_all_m(spec, 3))
        self.assertFalse(ch.q_positive_for_all_m(spec, 2))
        self.assertTrue(ch.q_positive_for_all_m(ch.catalog_lookup("I_{1,1}"),
                                                1))
        # III_2 shares m_Omega with IV_3
        self.assertEqual(ch.m_omega(ch.catalog_lookup("III_2")).m_omega, 6)

    def test_published_table(self):
        """
        Test the published cells and the verification of closed forms.

        :return: None
        """
        entries = [e for key in ch.PUBLISHED_THRESHOLDS
                   for e in ch.PUBLISHED_THRESHOLDS[key]]
        self.assertEqual(len(entries), 30)
        spec = ch.catalog_lookup("I_{1,4}")
        entry = ch.published_entry(spec, 3, 1)
        self.assertEqual(entry.printed, 1.61819)
        self.assertEqual(entry.reference, 1.68819)
        self.assertIsNone(ch.published_entry(spec, 3, 2))
        self.assertEqual(len(ch.published_entries(ch.catalog_lookup("I_{2,2}"))),
                         9)
        self.assertEqual(ch.published_entries(ch.catalog_lookup("IV_5")), [])

        num_closed = 0
        for key, cells in ch.PUBLISHED_THRESHOLDS.items():
            spec = ch.DomainSpec(*key)
            for entry in cells:
                if entry.expression is None:
                    continue
                num_closed += 1
                value = ch.threshold(spec, entry.m).roots[entry.index-1].value
                check = ch.verify_closed_form(spec, entry.m, entry.index,
                                              value)
                self.assertTrue(check.ok, msg=f"{entry.label} {entry.m}")
                self.assertTrue(check.contained)
        self.assertEqual(num_closed, 16)
        TestHelper(self).test_raise(
            lambda: ch.verify_closed_form(spec, 2, 1), ValueError)

    def test_table(self):
        """
        Test a small threshold table against the published values.

        :return: None
        """
        config = ch.Config()
        config.table['types'] = ['I_{1,2}', 'IV_4']
        config.table['m_max'] = 3
        table = ch.ThresholdTable(config)
        rows = table.run()
        self.assertTrue(table.all_match(rows))
        labels = [(row.label, row.m, row.index) for row in rows]
        self.assertEqual(labels[:3], [("I_{1,2}", 1, 1), ("I_{1,2}", 2, 1),
                                      ("I_{1,2}", 3, 1)])
        self.assertIn(("IV_4", 1, 2), labels)
        self.assertIsNone(rows[2].value)
        self.assertIsNone(rows[2].printed)
        text = ch.ThresholdTable.to_csv(rows)
        self.assertTrue(text.startswith("type,m,index,value"))
        data = ch.ThresholdTable.to_json(rows)
        self.assertAlmostEqual(float(data[0]["value_decimal"]), 2.0, places=8)
        self.assertEqual(data[2]["value"], "inf")


if __name__ == "__main__":
    unittest.main()
