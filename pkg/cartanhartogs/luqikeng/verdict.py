"""Lu Qikeng verdicts and half-plane root counts of P_mu^m."""

from fractions import Fraction
from typing import Any, List, NamedTuple, Tuple

from ..base.constants import ROOT_TOL, AMBIGUITY_FACTOR
from ..base.domains import DomainSpec
from ..base.exactmath import (RatPoly, Interval, to_rational, cauchy_bound,
                              isolate_real_roots, square_free_part,
                              sturm_count)
from ..base.exceptions import (MuNotPositiveError, BoundaryMuError,
                               CriterionChainError, OracleDisagreementError)
from ..hua.decomp import (representative_polynomial, q_poly,
                          normalized_derivatives)
from ..localization.halfplane import (HALF, roots_left_of_half,
                                      closed_half_plane_test)
from ..oracle.roots import numeric_roots, classify_roots


__all__ = ["Verdict", "RootCount", "is_classified", "check_mu",
           "decide", "halfplane_root_count"]


class Verdict(NamedTuple):
    """
    Lu Qikeng decision for (spec, m, mu).

    Attributes
    ----------
    label: str
        name of the base domain
    m: int
        fiber dimension
    mu: Fraction
        exponent
    is_lu_qikeng: bool
        whether P_mu^m has no root in Re eta > 1/2
    boundary: bool
        whether q_m(mu) = 0 exactly, i.e. mu sits on a threshold
    right_halfplane_root_count: int
        roots of P_mu^m in Re eta > 1/2 from the numeric oracle, -1 if not
        computed
    method: Tuple[Tuple[str, str], ...]
        trace of the evaluated criteria as (name, value) pairs
    """
    label: str
    m: int
    mu: Fraction
    is_lu_qikeng: bool
    boundary: bool
    right_halfplane_root_count: int = -1
    method: Tuple[Tuple[str, str], ...] = ()


class RootCount(NamedTuple):
    """
    Roots of P_mu^m in Re eta > 1/2.

    Attributes
    ----------
    count: int
        number of roots with Re eta > 1/2, with multiplicity
    all_real: bool
        whether all these roots are real, decided exactly by Sturm counting
    ambiguous: int
        number of numeric roots too close to Re eta = 1/2 to classify
    roots: List[complex]
        the roots with Re eta > 1/2
    """
    count: int
    all_real: bool
    ambiguous: int
    roots: List[complex]


def is_classified(spec: DomainSpec) -> bool:
    """
    Whether q_m positivity is known to decide the Lu Qikeng property.

    This holds for the balls I_{1,n} with n <= 4 and for IV_3, IV_4.

    :param spec: domain specification
    :return: True for the classified low-dimensional domains
    """
    return spec.d <= 4 and (spec.r == 1 or spec.a >= 1)


def check_mu(mu: Any) -> Fraction:
    """Convert mu to a rational and make sure it is positive."""
    mu = to_rational(mu)
    if mu <= 0:
        raise MuNotPositiveError(mu)
    return mu


def _check_m(m: int) -> None:
    if m < 1:
        raise ValueError(f"fiber dimension m = {m} should be >= 1")


def _sign_text(value: Fraction) -> str:
    return "+" if value > 0 else ("0" if value == 0 else "-")


def _roots_below(q: RatPoly, mu: Fraction) -> int:
    """Distinct roots of q in (0, mu)."""
    count = sturm_count(square_free_part(q), Interval(0, mu))
    return count - (1 if q(mu) == 0 else 0)


def decide(spec: DomainSpec, m: int, mu: Any, count_roots: bool = False,
           tol: float = ROOT_TOL) -> Verdict:
    """
    Decide whether the Cartan-Hartogs domain over spec is Lu Qikeng.

    The domain is Lu Qikeng iff P_mu^m does not vanish in Re eta > 1/2.
    For the classified domains (see is_classified) this is equivalent to
    q_m having no root in (0, mu). The closed-form half-plane quantities
    and the exact closed-half-plane test on the instantiated polynomial are
    evaluated as well and must agree. Other domains are decided by the
    exact closed-half-plane test alone.

    :param spec: domain specification
    :param m: fiber dimension, >= 1
    :param mu: positive rational exponent, decimal strings are exact
    :param count_roots: whether to count roots in Re eta > 1/2 numerically
    :param tol: tolerance of the numeric root count
    :return: the verdict
    :raises MuNotPositiveError: if mu <= 0
    :raises CriterionChainError: if equivalent criteria disagree
    """
    mu = check_mu(mu)
    _check_m(m)
    rep = representative_polynomial(spec, m)
    p = rep.at_mu(mu)
    q = rep.at_eta(HALF)
    q_value = q(mu)
    closed = closed_half_plane_test(p)
    method = [("q_m(mu)", _sign_text(q_value))]
    for k, deriv in enumerate(normalized_derivatives(rep, m), start=1):
        method.append((f"q_m^{k}(mu)", _sign_text(deriv(mu))))

    if is_classified(spec):
        is_lq = _roots_below(q, mu) == 0
        strict = roots_left_of_half(p)
        method.extend((name, _sign_text(value))
                      for name, value in strict.conditions)
        if closed.no_right_roots != is_lq:
            raise CriterionChainError(f"q_m has roots below mu = {mu} is "
                                      f"{not is_lq} while the closed "
                                      f"half-plane test gives "
                                      f"{closed.no_right_roots} for "
                                      f"{spec.name}, m = {m}")
        if is_lq and q_value != 0 and not strict.stable:
            raise CriterionChainError(f"half-plane quantities of P at "
                                      f"mu = {mu} are not positive although "
                                      f"q_m has no root in (0, mu]")
        method.append(("path", "q_m roots in (0, mu)"))
    else:
        is_lq = closed.no_right_roots
        method.append(("path", "closed half-plane test"))
    method.append(("roots on Re eta = 1/2", str(closed.boundary_roots)))
    boundary = is_lq and q_value == 0

    count = -1
    if count_roots and q_value != 0:
        count = halfplane_root_count(spec, m, mu, tol).count
    return Verdict(spec.name, m, mu, is_lq, boundary, count, tuple(method))


def halfplane_root_count(spec: DomainSpec, m: int, mu: Any,
                         tol: float = ROOT_TOL,
                         factor: float = AMBIGUITY_FACTOR) -> RootCount:
    """
    Count the roots of P_mu^m with Re eta > 1/2.

    The count comes from numeric roots. It is validated against the exact
    closed-half-plane test (zero or not) and against the exact number of
    real roots in (1/2, +inf), which also decides whether the counted roots
    are all real.

    :param spec: domain specification
    :param m: fiber dimension, >= 1
    :param mu: positive rational exponent, not a root of q_m
    :param tol: tolerance of the numeric roots
    :param factor: width of the ambiguity band in units of tol
    :return: the count
    :raises MuNotPositiveError: if mu <= 0
    :raises BoundaryMuError: if q_m(mu) = 0
    :raises OracleNonConvergenceError: if root iteration fails
    :raises OracleDisagreementError: if numeric and exact results disagree
    """
    mu = check_mu(mu)
    _check_m(m)
    if q_poly(spec, m)(mu) == 0:
        raise BoundaryMuError(spec.name, m, mu)
    p = representative_polynomial(spec, m).at_mu(mu)
    split = classify_roots(numeric_roots(p, tol), tol, float(HALF), factor)
    count = len(split.right)
    closed = closed_half_plane_test(p)
    num_real = sum(iv.multiplicity for iv in
                   isolate_real_roots(p, Interval(HALF, cauchy_bound(p))))
    if not split.ambiguous:
        if (count == 0) != closed.no_right_roots:
            raise OracleDisagreementError(p.degree, f"{count} numeric roots "
                                                    f"in Re eta > 1/2, exact "
                                                    f"test says "
                                                    f"{closed.no_right_roots}")
        if num_real > count:
            raise OracleDisagreementError(p.degree, f"{num_real} real roots "
                                                    f"above 1/2 but only "
                                                    f"{count} numeric roots")
    return RootCount(count, num_real == count, len(split.ambiguous),
                     split.right)
