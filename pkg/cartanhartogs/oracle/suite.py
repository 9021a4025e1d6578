"""Numeric verification suites backing the verify command."""

import warnings
from fractions import Fraction
from typing import Any, Dict, List, NamedTuple, Optional

import numpy as np

from ..base.domains import catalog_lookup
from ..base.exceptions import BoundaryAmbiguityWarning
from ..config import Config
from ..hua.decomp import representative_polynomial
from ..kernel.bergman import range_lemma_check
from ..localization.halfplane import roots_left_of_half
from ..luqikeng.threshold import threshold
from ..luqikeng.verdict import decide
from ..parallel import MPIEnv
from ..utils import Timer, print_banner_line
from .integrals import hua_integral_mc, selberg_check
from .roots import classify_roots, numeric_roots, random_rooted_polynomial


__all__ = ["SuiteResult", "OracleSuite"]


class SuiteResult(NamedTuple):
    """
    Outcome of one verification suite.

    Attributes
    ----------
    name: str
        name of the suite
    passed: bool
        whether all the cases of the suite pass
    cases: List[Dict[str, Any]]
        per-case details, serializable
    """
    name: str
    passed: bool
    cases: List[Dict[str, Any]]

    def to_dict(self) -> Dict[str, Any]:
        return {"name": self.name, "passed": self.passed,
                "cases": self.cases}


class OracleSuite(MPIEnv):
    """
    Independent numeric checks of the exact pipeline.

    Attributes
    ----------
    _config: 'Config' instance
        parameters, groups 'generic', 'oracle' and 'kernel'
    _timer: 'Timer' instance
        timer of the suites
    mc_cases: List[Tuple[int, float]]
        (n, s) of the Monte-Carlo Hua integrals
    selberg_cases: List[Tuple[int, int, int, float]]
        (a, b, r, s) of the Selberg quadratures
    agreement_types: List[str]
        base domains of the decide-vs-roots comparison
    """
    mc_cases = [(1, 1.0), (2, 1.0), (3, 0.5), (4, 2.0)]
    selberg_cases = [(2, 0, 1, 1.0), (1, 0, 2, 0.0), (2, 0, 2, 1.0),
                     (1, 0, 2, 2.5)]
    agreement_types = ["I_{1,2}", "I_{1,3}", "IV_3", "I_{1,4}", "IV_4"]

    def __init__(self, config: Optional[Config] = None,
                 enable_mpi: bool = False,
                 echo_details: bool = False) -> None:
        """
        :param config: parameters, defaults if None
        :param enable_mpi: whether to distribute the work with MPI
        :param echo_details: whether to report parallelization details
        """
        super().__init__(enable_mpi=enable_mpi, echo_details=echo_details)
        self._config = Config() if config is None else config
        self._config.check_params()
        self._timer = Timer()

    @property
    def config(self) -> Config:
        """Interface for the '_config' attribute."""
        return self._config

    def run_hua_integrals(self) -> SuiteResult:
        """
        Compare Monte-Carlo Hua integrals over balls with n!/(s+1)_n.

        A case passes within 4 standard errors.

        :return: the result
        """
        cfg = self._config
        cases = []
        for n, s in self.mc_cases:
            est = hua_integral_mc(n, s, samples=cfg.oracle['mc_samples'],
                                  seed=cfg.generic['seed'],
                                  batch=cfg.oracle['mc_batch'],
                                  enable_mpi=self.mpi_enabled)
            cases.append({"n": n, "s": s, "estimate": est.estimate,
                          "stderr": est.stderr, "exact": est.exact,
                          "passed": bool(est.deviation < 4.0)})
        return SuiteResult("hua_integral",
                           all(c["passed"] for c in cases), cases)

    def run_selberg(self) -> SuiteResult:
        """
        Compare Selberg quadratures with C(a,b,r)/chi(s).

        A case passes within a relative deviation of 1e-6.

        :return: the result
        """
        cfg = self._config.oracle
        cases = []
        for a, b, r, s in self.selberg_cases:
            check = selberg_check(a, b, r, s, limit=cfg['quad_limit'],
                                  epsabs=cfg['quad_epsabs'],
                                  epsrel=cfg['quad_epsrel'])
            cases.append({"a": a, "b": b, "r": r, "s": s,
                          "value": check.value, "exact": check.exact,
                          "rel_deviation": check.rel_deviation,
                          "passed": bool(check.rel_deviation < 1.0e-6)})
        return SuiteResult("selberg", all(c["passed"] for c in cases), cases)

    def run_localization(self, num_polys: Optional[int] = None,
                         max_degree: int = 6) -> SuiteResult:
        """
        Compare roots_left_of_half with numeric roots on random polynomials
        whose roots are constructed at known positions.

        Each process draws from default_rng([seed, rank]).

        :param num_polys: number of polynomials, config value if None
        :param max_degree: largest degree
        :return: the result, cases listing disagreements only
        """
        cfg = self._config
        if num_polys is None:
            num_polys = cfg.oracle['num_random_polys']
        rng = np.random.default_rng([cfg.generic['seed'], self.rank])
        tol = cfg.oracle['root_tol']
        failures = []
        for _ in self.dist_range(num_polys):
            degree = int(rng.integers(1, max_degree + 1))
            p, roots = random_rooted_polynomial(rng, degree)
            expected = all(r.real < 0.5 for r in roots)
            exact = roots_left_of_half(p).stable
            found = classify_roots(
                numeric_roots(p, tol=tol, dps=cfg.generic['mp_dps'],
                              max_steps=cfg.oracle['max_steps'],
                              extra_prec=cfg.oracle['extra_prec']),
                tol=tol, factor=cfg.oracle['ambiguity_factor'])
            numeric = not found.right and not found.ambiguous
            if not expected == exact == numeric:
                failures.append({"poly": p.to_string("z"),
                                 "expected": expected, "exact": exact,
                                 "numeric": numeric})
        failures = self.all_gather(failures)
        return SuiteResult("localization", not failures, failures)

    def run_decide_agreement(self, m_max: int = 7,
                             num_mu: Optional[int] = None) -> SuiteResult:
        """
        Compare decide() with numeric roots of P_mu^m between all thresholds
        of each tabulated domain.

        mu is drawn uniformly from every interval between consecutive
        positive roots of q_m, from (0, mu_{m,1}) and from beyond the last
        root up to twice its value plus 5, each kept 10*tol away from the
        roots. If q_m has no positive root mu is drawn from (0, 20).

        :param m_max: largest fiber dimension
        :param num_mu: values of mu per window, config value if None
        :return: the result, cases listing disagreements only
        """
        cfg = self._config
        if num_mu is None:
            num_mu = cfg.oracle['num_mu_samples']
        rng = np.random.default_rng([cfg.generic['seed'], self.rank])
        tol = cfg.generic['tol']
        cells = [(label, m) for label in self.agreement_types
                 for m in range(1, m_max + 1)]
        failures = []
        for label, m in self.dist_list(cells):
            spec = catalog_lookup(label)
            report = threshold(spec, m, tol)
            cuts = [root.value for root in report.roots]
            if cuts:
                cuts = [Fraction(0)] + cuts + [2 * cuts[-1] + 5]
                windows = [(lo + 10 * tol, hi - 10 * tol)
                           for lo, hi in zip(cuts[:-1], cuts[1:])]
            else:
                windows = [(Fraction(0), Fraction(20))]
            poly = representative_polynomial(spec, m)
            for lo, hi in windows:
                for _ in range(num_mu):
                    mu = lo + (hi - lo) * Fraction(
                        int(rng.integers(1, 10**6)), 10**6)
                    verdict = decide(spec, m, mu)
                    with warnings.catch_warnings():
                        warnings.simplefilter("ignore",
                                              BoundaryAmbiguityWarning)
                        found = classify_roots(
                            numeric_roots(poly.at_mu(mu),
                                          tol=cfg.oracle['root_tol']),
                            tol=cfg.oracle['root_tol'],
                            factor=cfg.oracle['ambiguity_factor'])
                    if found.ambiguous:
                        continue
                    if verdict.is_lu_qikeng != (not found.right):
                        failures.append({"type": label, "m": m,
                                         "mu": str(mu),
                                         "decide": verdict.is_lu_qikeng,
                                         "right_roots": len(found.right)})
        failures = self.all_gather(failures)
        return SuiteResult("decide_agreement", not failures, failures)

    def run_range_lemma(self, label: str = "I_{1,2}", m: int = 2,
                        mu: Any = Fraction(3, 2)) -> SuiteResult:
        """
        Check |xi| < 1 and Re eta > 1/2 on random pairs of domain points.

        :param label: base domain, a ball or a Lie ball
        :param m: fiber dimension
        :param mu: positive exponent
        :return: the result
        """
        cfg = self._config
        num_local = len(self.dist_range(cfg.kernel['num_pairs']))
        report = range_lemma_check(catalog_lookup(label), m, mu,
                                   num_pairs=num_local,
                                   seed=cfg.generic['seed'] + self.rank,
                                   batch=cfg.oracle['mc_batch'])
        stats = self.all_reduce(np.array([report.violations,
                                          report.num_pairs], dtype=float))
        case = {"type": label, "m": m, "mu": str(mu),
                "num_pairs": int(stats[1]), "violations": int(stats[0]),
                "max_abs_xi": report.max_abs_xi,
                "min_re_eta": report.min_re_eta}
        return SuiteResult("range_lemma", case["violations"] == 0, [case])

    def run_all(self, verbose: bool = True) -> List[SuiteResult]:
        """
        Run every suite and print a summary on master process.

        :param verbose: whether to print the summary
        :return: results of the suites
        """
        if verbose:
            self.log("Oracle suites started")
        results = []
        for name, func in (("hua_integral", self.run_hua_integrals),
                           ("selberg", self.run_selberg),
                           ("localization", self.run_localization),
                           ("decide_agreement", self.run_decide_agreement),
                           ("range_lemma", self.run_range_lemma)):
            self._timer.tic(name)
            results.append(func())
            self._timer.toc(name)
        if not verbose:
            return results
        if self.is_master:
            print_banner_line("Oracle suites")
        for result in results:
            status = "passed" if result.passed else "FAILED"
            self.print(f"{result.name:20s} : {status}")
            if not result.passed:
                self.warn(f"{result.name}: {result.cases[:3]}")
        if self.is_master:
            self._timer.report_time()
        return results
