#! /usr/bin/env python

import io
import json
import os
import subprocess
import sys
import tempfile
import unittest
from contextlib import redirect_stdout, redirect_stderr
from fractions import Fraction

import cartanhartogs as ch
from cartanhartogs import cli


def run(*argv):
    """Run the command line, returning exit code, stdout and stderr."""
    out, err = io.StringIO(), io.StringIO()
    with redirect_stdout(out), redirect_stderr(err):
        code = cli.main(list(argv))
    return code, out.getvalue(), err.getvalue()


def run_json(*argv):
    """Run the command line with --json, returning exit code and data."""
    code, out, _ = run(*argv, "--json")
    return code, json.loads(out)


class MyTest(unittest.TestCase):

    def test_fresh_import(self):
        """
        Test importing the package and its modules in a new interpreter.

        :return: None
        """
        root = os.path.dirname(os.path.dirname(os.path.abspath(ch.__file__)))
        env = dict(os.environ)
        env["PYTHONPATH"] = os.pathsep.join(
            [root] + [p for p in [env.get("PYTHONPATH")] if p])
        for module in ("cartanhartogs", "cartanhartogs.cli",
                       "cartanhartogs.oracle.suite",
                       "cartanhartogs.luqikeng.verdict",
                       "cartanhartogs.oracle.roots"):
            result = subprocess.run([sys.executable, "-c", f"import {module}"],
                                    env=env, capture_output=True, text=True)
            self.assertEqual(result.returncode, 0, result.stderr)

    def test_chi(self):
        """
        Test printing of Hua polynomials.

        :return: None
        """
        code, data = run_json("chi", "IV_3")
        self.assertEqual(code, 0)
        self.assertEqual(data["factored"], "(s+1)(s+3/2)(s+2)")
        self.assertEqual(data["coefficients"], ["3", "13/2", "9/2", "1"])
        self.assertEqual((data["d"], data["g"]), (3, 3))
        code, data = run_json("chi", "--raw", "2", "1", "1")
        self.assertEqual(data["factored"], "(s+1)(s+2)")
        code, out, _ = run("chi", "I_{1,1}")
        self.assertEqual(code, 0)
        self.assertIn("chi(s) = s+1", out)
        self.assertEqual(cli.format_factors(ch.catalog_lookup("IV_4")),
                         "(s+1)(s+2)^2(s+3)")

    def test_decompose(self):
        """
        Test the raising-factorial coefficients C_j.

        :return: None
        """
        code, data = run_json("decompose", "I_{1,2}")
        self.assertEqual(code, 0)
        self.assertEqual(data["C"][1], ["3", "-3"])
        code, data = run_json("decompose", "I_{1,4}")
        self.assertEqual(data["C"][1], ["10", "-10"])
        code, data = run_json("decompose", "--raw", "1", "0", "1")
        self.assertEqual(data["chi"], ["1", "1"])
        self.assertEqual(data["C"], [["1"], ["1", "-1"]])
        # every emitted rational parses back
        for c in data["C"]:
            self.assertTrue(all(isinstance(Fraction(x), Fraction)
                                for x in c))

    def test_poly(self):
        """
        Test printing of P_mu^m and q_m.

        :return: None
        """
        code, data = run_json("poly", "I_{1,2}", "--m", "2", "--mu", "0.5")
        self.assertEqual(code, 0)
        self.assertEqual(data["mu"], "1/2")
        expected = ch.representative_polynomial(
            ch.catalog_lookup("I_{1,2}"), 2).at_mu(Fraction(1, 2))
        self.assertEqual([Fraction(c) for c in data["coefficients"]],
                         list(expected.coefficients))
        code, data = run_json("poly", "IV_3", "--m", "1")
        self.assertEqual(len(data["eta_coefficients"]), 4)
        code, data = run_json("qpoly", "I_{1,2}", "--m", "1")
        q = (2 + ch.RatPoly.monomial(1)) * (1 - ch.RatPoly.monomial(1) / 2)
        self.assertEqual([Fraction(c) for c in data["coefficients"]],
                         list(q.coefficients))
        code, data = run_json("qpoly", "I_{1,3}", "--m", "1", "--order", "2")
        self.assertEqual(data["coefficients"], ["12"])

    def test_decide(self):
        """
        Test verdicts and exit codes of decide.

        :return: None
        """
        code, data = run_json("decide", "I_{1,2}", "--m", "2", "--mu", "4")
        self.assertEqual(code, cli.EXIT_BOUNDARY)
        self.assertTrue(data["is_lu_qikeng"])
        self.assertTrue(data["boundary"])
        self.assertEqual(data["mu"], "4")
        code, data = run_json("decide", "IV_4", "--m", "7", "--mu", "7")
        self.assertEqual(code, cli.EXIT_NOT_LU_QIKENG)
        self.assertFalse(data["is_lu_qikeng"])
        code, _, _ = run("decide", "I_{1,1}", "--m", "1", "--mu", "1000000")
        self.assertEqual(code, cli.EXIT_LU_QIKENG)
        code, data = run_json("decide", "IV_4", "--m", "1", "--mu", "2",
                              "--count-roots")
        self.assertEqual(data["right_halfplane_root_count"], 1)
        self.assertEqual(code, cli.EXIT_NOT_LU_QIKENG)

    def test_threshold(self):
        """
        Test threshold and m_Omega output.

        :return: None
        """
        code, out, _ = run("threshold", "I_{1,4}", "--m", "2")
        self.assertEqual(code, 0)
        self.assertIn("mu_{2,1} = 1.4151", out)
        self.assertIn("mu_{2,2} = 11.333", out)
        code, out, _ = run("threshold", "I_{1,2}", "--m", "5")
        self.assertIn("mu_{5,1} = +inf", out)
        code, data = run_json("threshold", "I_{1,3}", "--m", "1",
                              "--tol", "1/1000000")
        self.assertEqual(data["tol"], "1/1000000")
        root = data["roots"][0]
        self.assertLess(Fraction(root["lo"]), Fraction(root["hi"]))
        self.assertAlmostEqual(float(root["decimal"]), 2 ** 0.5,
                               delta=1.0e-6)
        code, data = run_json("momega", "IV_4")
        self.assertEqual(data["m_omega"], 8)
        self.assertTrue(data["proven"])

    def test_rootcount_kernel(self):
        """
        Test root counts and kernel evaluation.

        :return: None
        """
        code, data = run_json("rootcount", "IV_4", "--m", "1", "--mu", "5")
        self.assertEqual(code, 0)
        self.assertEqual(data["count"], 2)
        code, _, err = run("rootcount", "I_{1,4}", "--m", "1", "--mu", "4")
        self.assertEqual(code, cli.EXIT_ERROR)
        self.assertIn("error:", err)

        code, data = run_json("kernel-eval", "I_{1,2}", "--m", "1", "--mu",
                              "1", "--z", "0,0", "--Z", "0.5")
        self.assertEqual(code, 0)
        self.assertAlmostEqual(data["xi"][0], 0.25)
        self.assertAlmostEqual(data["eta"][0], 4 / 3)
        code, data = run_json("kernel-eval", "I_{1,2}", "--m", "2", "--mu",
                              "3/2", "--pairs", "1000", "--seed", "9")
        self.assertEqual(data["range_lemma"]["violations"], 0)
        code, data = run_json("kernel-eval", "I_{1,2}", "--m", "1", "--mu",
                              "3")
        self.assertGreater(data["sign_change"]["eta"], 0.5)
        code, data = run_json("kernel-eval", "I_{1,2}", "--m", "1", "--mu",
                              "1")
        self.assertIsNone(data["sign_change"])

    def test_table(self):
        """
        Test the table command with CSV output.

        :return: None
        """
        with tempfile.TemporaryDirectory() as tmp:
            path = os.path.join(tmp, "table.csv")
            code, data = run_json("table", "--types", "I_{1,2}", "I_{1,3}",
                                  "--m-max", "3", "--csv", path)
            self.assertEqual(code, 0)
            self.assertEqual([row["type"] for row in data][:3],
                             ["I_{1,2}"] * 3)
            with open(path) as f:
                lines = f.read().splitlines()
            self.assertEqual(len(lines), len(data) + 1)
        code, out, _ = run("table", "--types", "I_{1,2}", "--m-max", "2")
        self.assertEqual(code, 0)
        self.assertIn("I_{1,2}", out)

    def test_verify(self):
        """
        Test a single oracle suite from the command line.

        :return: None
        """
        code, out, _ = run("verify", "--suite", "selberg")
        self.assertEqual(code, 0)
        self.assertIn("selberg: passed", out)
        config = ch.Config()
        config.kernel['num_pairs'] = 500
        with tempfile.TemporaryDirectory() as tmp:
            path = os.path.join(tmp, "config.pkl")
            config.save(path)
            code, data = run_json("verify", "--suite", "range_lemma",
                                  "--config", path)
        self.assertEqual(code, 0)
        self.assertEqual(data[0]["cases"][0]["num_pairs"], 500)

    def test_errors(self):
        """
        Test exit code 2 on parse and domain errors.

        :return: None
        """
        code, _, err = run("chi", "V_3")
        self.assertEqual(code, cli.EXIT_ERROR)
        self.assertIn("unknown domain type", err)
        self.assertEqual(run("chi")[0], cli.EXIT_ERROR)
        self.assertEqual(run("decide", "I_{1,2}", "--m", "1")[0],
                         cli.EXIT_ERROR)
        self.assertEqual(run("decide", "I_{1,2}", "--m", "1", "--mu",
                             "-1")[0], cli.EXIT_ERROR)
        self.assertEqual(run("decide", "I_{1,2}", "--m", "1", "--mu",
                             "abc")[0], cli.EXIT_ERROR)
        self.assertEqual(run("nosuchcommand")[0], cli.EXIT_ERROR)
        self.assertEqual(run("kernel-eval", "I_{2,3}", "--m", "1", "--mu",
                             "1")[0], cli.EXIT_ERROR)
        self.assertEqual(run("chi", "--help")[0], 0)


if __name__ == "__main__":
    unittest.main()
