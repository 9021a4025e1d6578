"""Hurwitz matrices, Routh-Hurwitz and Lienard-Chipart stability tests."""

from fractions import Fraction
from typing import List, NamedTuple, Optional, Sequence, Tuple

from ..base.exactmath import RatPoly
from ..base.exceptions import (LeadingCoefficientNotPositiveError,
                               WrongDegreeError, DegreeZeroError)


__all__ = ["StabilityReport", "hurwitz_matrix", "hurwitz_minors",
           "is_stable", "lienard_chipart_deg4", "make_report"]


class StabilityReport(NamedTuple):
    """
    Outcome of a stability test.

    Attributes
    ----------
    stable: bool
        whether all required quantities are strictly positive
    hurwitz_minors: Tuple[Fraction, ...]
        Delta_1 ... Delta_n of the tested polynomial
    failed_index: Optional[int]
        1-based index in 'conditions' of the first non-positive quantity
    boundary: bool
        whether the test failed only through exactly vanishing quantities
        of a polynomial with non-negative coefficients
    conditions: Tuple[Tuple[str, Fraction], ...]
        named quantities required to be positive
    """
    stable: bool
    hurwitz_minors: Tuple[Fraction, ...]
    failed_index: Optional[int]
    boundary: bool
    conditions: Tuple[Tuple[str, Fraction], ...] = ()


def _leading_first(p: RatPoly) -> List[Fraction]:
    """Coefficients a_0 (leading) ... a_n."""
    return list(reversed(p.coefficients))


def _check_polynomial(p: RatPoly) -> None:
    if p.degree < 1:
        raise DegreeZeroError()
    if p.leading <= 0:
        raise LeadingCoefficientNotPositiveError(p.leading)


def hurwitz_matrix(p: RatPoly) -> List[List[Fraction]]:
    """
    Build the n*n Hurwitz matrix H[i][j] = a_{2j-i} (1-based indices).

    Coefficients follow the convention p(z) = a_0 z^n + a_1 z^{n-1} + ...
    + a_n, with a_k = 0 for k < 0 or k > n.

    :param p: polynomial of degree n >= 1
    :return: the Hurwitz matrix as nested lists
    """
    a = _leading_first(p)
    n = p.degree

    def _coeff(k):
        return a[k] if 0 <= k <= n else Fraction(0)

    return [[_coeff(2 * (j + 1) - (i + 1)) for j in range(n)]
            for i in range(n)]


def _bareiss_det(matrix: Sequence[Sequence[Fraction]]) -> Fraction:
    """
    Determinant by fraction-free (Bareiss) elimination with row pivoting.

    :param matrix: square matrix of rationals
    :return: its determinant
    """
    m = [list(row) for row in matrix]
    n = len(m)
    if n == 0:
        return Fraction(1)
    sign = 1
    prev = Fraction(1)
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return Fraction(0)
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev
        prev = m[k][k]
    return sign * Fraction(m[n-1][n-1])


def hurwitz_minors(p: RatPoly) -> List[Fraction]:
    """
    Leading principal minors Delta_1 ... Delta_n of the Hurwitz matrix.

    :param p: polynomial with positive leading coefficient
    :return: list of minors
    :raises DegreeZeroError: if p is constant
    :raises LeadingCoefficientNotPositiveError: if a_0 <= 0
    """
    _check_polynomial(p)
    h = hurwitz_matrix(p)
    return [_bareiss_det([row[:k] for row in h[:k]])
            for k in range(1, p.degree + 1)]


def make_report(p: RatPoly, minors: Sequence[Fraction],
                conditions: Sequence[Tuple[str, Fraction]]) -> StabilityReport:
    """
    Assemble a StabilityReport from the required quantities.

    :param p: the tested polynomial
    :param minors: its Hurwitz minors
    :param conditions: named quantities required to be positive
    :return: the report
    """
    failed_index = None
    for i, (_, value) in enumerate(conditions):
        if value <= 0:
            failed_index = i + 1
            break
    stable = failed_index is None
    boundary = (not stable
                and all(value >= 0 for _, value in conditions)
                and all(c >= 0 for c in p.coefficients))
    return StabilityReport(stable, tuple(minors), failed_index, boundary,
                           tuple(conditions))


def is_stable(p: RatPoly) -> StabilityReport:
    """
    Routh-Hurwitz test: all roots in Re z < 0 iff all Delta_k > 0.

    :param p: polynomial with positive leading coefficient
    :return: stability report with conditions Delta_1 ... Delta_n
    :raises DegreeZeroError: if p is constant
    :raises LeadingCoefficientNotPositiveError: if a_0 <= 0
    """
    minors = hurwitz_minors(p)
    conditions = [(f"Delta_{k+1}", value) for k, value in enumerate(minors)]
    return make_report(p, minors, conditions)


def lienard_chipart_deg4(p: RatPoly) -> StabilityReport:
    """
    Lienard-Chipart test for quartics: a_2, a_3, a_4 > 0 and Delta_3 > 0.

    :param p: quartic with positive leading coefficient
    :return: stability report
    :raises WrongDegreeError: if p is not a quartic
    :raises LeadingCoefficientNotPositiveError: if a_0 <= 0
    """
    if p.degree != 4:
        raise WrongDegreeError(p.degree, 4)
    minors = hurwitz_minors(p)
    a = _leading_first(p)
    conditions = [("a_2", a[2]), ("a_3", a[3]), ("a_4", a[4]),
                  ("Delta_3", minors[2])]
    return make_report(p, minors, conditions)
