"""Thresholds mu_{m,i} and the integer m_Omega."""

from fractions import Fraction
from typing import Any, List, NamedTuple, Optional

from ..base.constants import DEFAULT_TOL, M_OMEGA_WINDOW, M_OMEGA_CAP
from ..base.domains import DomainSpec
from ..base.exactmath import (RatPoly, Interval, to_rational, cauchy_bound,
                              isolate_positive_roots, refine_root,
                              square_free_decomposition, sturm_count)
from ..base.exceptions import SearchLimitExceededError
from ..hua.decomp import q_poly, q_poly_in_m
from .verdict import decide, is_classified


__all__ = ["ThresholdRoot", "ThresholdReport", "threshold",
           "q_positive_for_all_m", "MOmegaReport", "m_omega"]


class ThresholdRoot(NamedTuple):
    """
    Positive root of q_m.

    Attributes
    ----------
    interval: Interval
        isolating interval from Sturm bisection
    value: Fraction
        refined value within tol of the root
    """
    interval: Interval
    value: Fraction

    def __float__(self) -> float:
        return float(self.value)


class ThresholdReport(NamedTuple):
    """
    Positive roots of q_m for given spec and m.

    Attributes
    ----------
    label: str
        name of the base domain
    m: int
        fiber dimension
    tol: Fraction
        refinement tolerance
    q_poly: RatPoly
        q_m as a polynomial in mu
    roots: List[ThresholdRoot]
        all distinct positive roots in ascending order
    verified_sufficient: bool
        whether decide() gives Lu Qikeng just below mu_m_1 and not Lu
        Qikeng just above it, both decided exactly, or Lu Qikeng at mu = 1
        and 100 when q_m has no positive root
    """
    label: str
    m: int
    tol: Fraction
    q_poly: RatPoly
    roots: List[ThresholdRoot]
    verified_sufficient: bool

    @property
    def mu_m_1(self) -> Optional[ThresholdRoot]:
        """Smallest positive root, None standing for +inf."""
        return self.roots[0] if self.roots else None

    @property
    def mu_m_2(self) -> Optional[ThresholdRoot]:
        """Second positive root, None standing for +inf."""
        return self.roots[1] if len(self.roots) > 1 else None

    @property
    def positive_root_count(self) -> int:
        """Number of distinct positive roots of q_m."""
        return len(self.roots)


def _switches_at_threshold(spec: DomainSpec, m: int, roots: List[ThresholdRoot],
           tol: Fraction) -> bool:
    """
    Check the Lu Qikeng property next to mu_{m,1} with exact decisions.

    :return: whether decide() is True just below mu_{m,1} and False just
        above, or True at mu = 1 and 100 if q_m has no positive root
    """
    if not roots:
        return all(decide(spec, m, mu).is_lu_qikeng for mu in (1, 100))
    first = roots[0].value
    below = max(first - tol, first / 2)
    above = first + tol
    if len(roots) > 1:
        above = min(above, (first + roots[1].value) / 2)
    return (decide(spec, m, below).is_lu_qikeng
            and not decide(spec, m, above).is_lu_qikeng)


def threshold(spec: DomainSpec, m: int, tol: Any = DEFAULT_TOL) -> \
        ThresholdReport:
    """
    Isolate and refine the positive roots of q_m.

    :param spec: domain specification
    :param m: fiber dimension, >= 1
    :param tol: positive refinement tolerance
    :return: the report, roots empty when q_m has no positive root
    :raises ValueError: if m < 1
    :raises ToleranceNotPositiveError: if tol <= 0
    """
    if m < 1:
        raise ValueError(f"fiber dimension m = {m} should be >= 1")
    tol = to_rational(tol)
    q = q_poly(spec, m)
    roots = [ThresholdRoot(iv, refine_root(q, iv, tol))
             for iv in isolate_positive_roots(q)]
    return ThresholdReport(spec.name, m, tol, q, roots,
                           _switches_at_threshold(spec, m, roots, tol))


def _non_negative_beyond(c: RatPoly, m0: Fraction) -> bool:
    """Whether c(m) >= 0 for all real m >= m0."""
    if c.is_zero():
        return True
    if c.degree == 0:
        return c.leading > 0
    if c.leading < 0 or c(m0) < 0:
        return False
    odd = RatPoly.constant(1)
    for factor, mult in square_free_decomposition(c):
        if mult % 2:
            odd = odd * factor
    if odd.degree < 1:
        return True
    return sturm_count(odd, Interval(m0, max(m0, cauchy_bound(odd)))) == 0


def q_positive_for_all_m(spec: DomainSpec, m0: int) -> bool:
    """
    Sufficient condition for q_m > 0 on mu > 0 for every m >= m0.

    Every mu-coefficient of q_m is a polynomial in m. If all of them are
    non-negative for m >= m0 and the constant one is positive, q_m has no
    positive root for any m >= m0.

    :param spec: domain specification
    :param m0: starting fiber dimension
    :return: whether the certificate holds
    """
    m0 = to_rational(m0)
    coeff = q_poly_in_m(spec)
    if coeff[0](m0) <= 0 or not _non_negative_beyond(coeff[0], m0):
        return False
    return all(_non_negative_beyond(c, m0) for c in coeff[1:])


class MOmegaReport(NamedTuple):
    """
    Outcome of the m_Omega search.

    Attributes
    ----------
    m_omega: int
        smallest m from which q_m has no positive root
    proven: bool
        whether the value is certain, by certificate or classification
    certificate: bool
        whether q_positive_for_all_m holds at m_omega
    window: int
        number of further m checked when the certificate is missing, 0 when
        it holds
    """
    m_omega: int
    proven: bool
    certificate: bool
    window: int


def _has_positive_root(spec: DomainSpec, m: int) -> bool:
    return bool(isolate_positive_roots(q_poly(spec, m)))


def m_omega(spec: DomainSpec, window: int = M_OMEGA_WINDOW,
            cap: int = M_OMEGA_CAP) -> MOmegaReport:
    """
    Search the smallest m such that q_{m'} has no positive root for m' >= m.

    Candidates are scanned upwards from m = 1. A candidate is accepted if
    q_positive_for_all_m holds there, or if q_{m'} has no positive root for
    all m' in [m, m + window].

    :param spec: domain specification
    :param window: number of further m to check without certificate
    :param cap: largest candidate
    :return: the report
    :raises SearchLimitExceededError: if no candidate <= cap is accepted
    """
    m = 1
    while m <= cap:
        if _has_positive_root(spec, m):
            m += 1
            continue
        if q_positive_for_all_m(spec, m):
            return MOmegaReport(m, True, True, 0)
        bad = next((k for k in range(m + 1, m + window + 1)
                    if _has_positive_root(spec, k)), None)
        if bad is None:
            return MOmegaReport(m, is_classified(spec), False, window)
        m = bad + 1
    raise SearchLimitExceededError(spec.name, cap)
