"""Published threshold values and closed forms for dimension <= 4."""

from typing import Any, Callable, Dict, List, NamedTuple, Optional, Tuple

import mpmath

from ..base.domains import DomainSpec
from ..base.exactmath import Interval, isolate_positive_roots, to_rational
from ..hua.decomp import q_poly


__all__ = ["PublishedEntry", "PUBLISHED_THRESHOLDS", "PUBLISHED_M_OMEGA",
           "published_entries", "published_entry", "published_m_omega",
           "ClosedFormCheck", "verify_closed_form"]


class PublishedEntry(NamedTuple):
    """
    One finite cell of the published threshold table.

    Attributes
    ----------
    label: str
        name of the base domain
    m: int
        fiber dimension
    index: int
        1 for mu_{m,1}, 2 for mu_{m,2}
    printed: float
        value as printed
    closed_form: Optional[str]
        closed form as printed, None for purely numeric cells
    expression: Optional[Callable[[], mpmath.mpf]]
        evaluates the closed form at the current mpmath precision
    erratum: Optional[float]
        corrected value when the printed one is a misprint
    """
    label: str
    m: int
    index: int
    printed: float
    closed_form: Optional[str] = None
    expression: Optional[Callable[[], Any]] = None
    erratum: Optional[float] = None

    @property
    def reference(self) -> float:
        """Value to compare with, the erratum if there is one."""
        return self.printed if self.erratum is None else self.erratum


def _closed(label, m, index, text, func):
    with mpmath.workdps(15):
        printed = float(func())
    return PublishedEntry(label, m, index, printed, text, func)


_sqrt = mpmath.sqrt

# Keys are the invariants (a, b, r), so III_2 and I_{2,2} share the entries
# of IV_3 and IV_4.
PUBLISHED_THRESHOLDS: Dict[Tuple[int, int, int], List[PublishedEntry]] = {
    (2, 1, 1): [
        _closed("I_{1,2}", 1, 1, "2", lambda: mpmath.mpf(2)),
        _closed("I_{1,2}", 2, 1, "4", lambda: mpmath.mpf(4)),
    ],
    (2, 2, 1): [
        _closed("I_{1,3}", 1, 1, "sqrt(2)", lambda: _sqrt(2)),
        _closed("I_{1,3}", 2, 1, "(1+sqrt(7))/2", lambda: (1 + _sqrt(7)) / 2),
        _closed("I_{1,3}", 3, 1, "1+sqrt(5/2)",
                lambda: 1 + _sqrt(mpmath.mpf(5) / 2)),
        _closed("I_{1,3}", 4, 1, "2+sqrt(6)", lambda: 2 + _sqrt(6)),
        _closed("I_{1,3}", 5, 1, "8+sqrt(70)", lambda: 8 + _sqrt(70)),
    ],
    (1, 0, 2): [
        _closed("IV_3", 1, 1, "2/sqrt(3)", lambda: 2 / _sqrt(3)),
        _closed("IV_3", 2, 1, "(3+sqrt(73))/8", lambda: (3 + _sqrt(73)) / 8),
        _closed("IV_3", 3, 1, "2", lambda: mpmath.mpf(2)),
        _closed("IV_3", 4, 1, "(9+sqrt(129))/6", lambda: (9 + _sqrt(129)) / 6),
        _closed("IV_3", 5, 1, "2(3+sqrt(10))", lambda: 2 * (3 + _sqrt(10))),
    ],
    (2, 3, 1): [
        _closed("I_{1,4}", 1, 1, "sqrt(3/2)",
                lambda: _sqrt(mpmath.mpf(3) / 2)),
        _closed("I_{1,4}", 1, 2, "4", lambda: mpmath.mpf(4)),
        PublishedEntry("I_{1,4}", 2, 1, 1.41518),
        PublishedEntry("I_{1,4}", 2, 2, 11.333),
        PublishedEntry("I_{1,4}", 3, 1, 1.61819, erratum=1.68819),
        PublishedEntry("I_{1,4}", 4, 1, 2.10335),
        PublishedEntry("I_{1,4}", 5, 1, 2.8029),
        PublishedEntry("I_{1,4}", 6, 1, 4.22107),
        PublishedEntry("I_{1,4}", 7, 1, 8.60867),
    ],
    (2, 0, 2): [
        _closed("IV_4", 1, 1, "sqrt(23-sqrt(337))/2",
                lambda: _sqrt(23 - _sqrt(337)) / 2),
        _closed("IV_4", 1, 2, "sqrt(23+sqrt(337))/2",
                lambda: _sqrt(23 + _sqrt(337)) / 2),
        PublishedEntry("IV_4", 2, 1, 1.21176),
        PublishedEntry("IV_4", 2, 2, 9.08062),
        PublishedEntry("IV_4", 3, 1, 1.41824),
        PublishedEntry("IV_4", 4, 1, 1.74173),
        PublishedEntry("IV_4", 5, 1, 2.29476),
        PublishedEntry("IV_4", 6, 1, 3.42405),
        PublishedEntry("IV_4", 7, 1, 6.92986),
    ],
}

PUBLISHED_M_OMEGA: Dict[Tuple[int, int, int], int] = {
    (2, 0, 1): 1,
    (2, 1, 1): 3,
    (2, 2, 1): 6,
    (1, 0, 2): 6,
    (2, 3, 1): 8,
    (2, 0, 2): 8,
}


def _key(spec: DomainSpec) -> Tuple[int, int, int]:
    # a does not enter rank-one invariants
    a = 2 if spec.r == 1 else spec.a
    return a, spec.b, spec.r


def published_entries(spec: DomainSpec) -> List[PublishedEntry]:
    """All published finite cells of spec, empty if it is not tabulated."""
    return list(PUBLISHED_THRESHOLDS.get(_key(spec), []))


def published_entry(spec: DomainSpec, m: int,
                    index: int) -> Optional[PublishedEntry]:
    """
    Get the published cell mu_{m,index} of spec.

    :param spec: domain specification
    :param m: fiber dimension
    :param index: 1 or 2
    :return: the cell, None if the table lists +inf or nothing
    """
    for entry in published_entries(spec):
        if entry.m == m and entry.index == index:
            return entry
    return None


def published_m_omega(spec: DomainSpec) -> Optional[int]:
    """Published m_Omega of spec, None if not tabulated."""
    return PUBLISHED_M_OMEGA.get(_key(spec))


def _to_mpf(value: Any) -> mpmath.mpf:
    value = to_rational(value)
    return mpmath.mpf(value.numerator) / value.denominator


class ClosedFormCheck(NamedTuple):
    """
    Verification of a closed-form threshold.

    Attributes
    ----------
    closed_form: str
        the closed form
    exact: mpmath.mpf
        its high-precision value
    residual: mpmath.mpf
        |q_m(exact)| relative to the sum of |coefficients| times powers
    contained: bool
        whether exact lies in the isolating interval of the root
    deviation: Optional[float]
        |value - exact| for the supplied value, None if not supplied
    ok: bool
        whether all the checks pass
    """
    closed_form: str
    exact: Any
    residual: Any
    contained: bool
    deviation: Optional[float]
    ok: bool


def verify_closed_form(spec: DomainSpec, m: int, index: int,
                       value: Any = None, tol: float = 1.0e-9,
                       dps: int = 60) -> ClosedFormCheck:
    """
    Verify a closed-form threshold against q_m.

    The closed form is evaluated at dps digits. It must make q_m vanish up
    to a relative residual of 10^(20-dps) and lie in the Sturm isolating
    interval of the index-th positive root. If value is given, it must lie
    within tol of the closed form.

    :param spec: domain specification
    :param m: fiber dimension
    :param index: position of the root among the positive roots, from 1
    :param value: refined value to compare with
    :param tol: accepted deviation of value
    :param dps: decimal digits of the evaluation
    :return: the check
    :raises ValueError: if the cell has no closed form
    """
    entry = published_entry(spec, m, index)
    if entry is None or entry.expression is None:
        raise ValueError(f"no closed form for mu_{{{m},{index}}} of "
                         f"{spec.name}")
    q = q_poly(spec, m)
    intervals = isolate_positive_roots(q)
    with mpmath.workdps(dps):
        exact = entry.expression()
        coeff = [_to_mpf(c) for c in reversed(q.coefficients)]
        residual = (abs(mpmath.polyval(coeff, exact))
                    / mpmath.polyval([abs(c) for c in coeff], abs(exact)))
        contained = False
        if len(intervals) >= index:
            iv: Interval = intervals[index-1]
            contained = bool(_to_mpf(iv.lo) < exact <= _to_mpf(iv.hi))
        deviation = None
        if value is not None:
            deviation = float(abs(_to_mpf(value) - exact))
        ok = (residual < mpmath.mpf(10) ** (20 - dps) and contained
              and (deviation is None or deviation < tol))
        return ClosedFormCheck(entry.closed_form, +exact, +residual,
                               contained, deviation, bool(ok))
