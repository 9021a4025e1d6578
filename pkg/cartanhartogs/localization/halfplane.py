"""Root localization with respect to the line Re z = 1/2."""

from fractions import Fraction
from typing import Any, Dict, NamedTuple, Optional, Sequence

from ..base.exactmath import (RatPoly, Interval, cauchy_bound, poly_divmod,
                              poly_gcd, square_free_decomposition,
                              sturm_count)
from ..base.exceptions import DegreeZeroError, CriterionChainError
from .hurwitz import StabilityReport, is_stable, make_report


__all__ = ["HALF", "half_plane_delta2", "half_plane_delta3",
           "half_plane_quantities", "shift_to_half", "roots_left_of_half",
           "symmetric_factor", "imaginary_axis_count",
           "ClosedHalfPlaneReport",
           "closed_half_plane_test"]


HALF = Fraction(1, 2)


def half_plane_delta2(alpha: Any, beta: Any, gamma: Any, delta: Any) -> Any:
    """
    Delta_2 of the cubic alpha + beta z + gamma z^2 + delta z^3 shifted by
    1/2, expressed in the unshifted coefficients.

    Works on any ring whose elements support + - *, e.g. Fractions or
    polynomials in mu.

    :return: (gamma+delta)(beta+gamma+delta) - alpha delta
    """
    return (gamma + delta) * (beta + gamma + delta) - alpha * delta


def half_plane_delta3(alpha: Any, beta: Any, gamma: Any, delta: Any,
                      epsilon: Any) -> Any:
    """
    Delta_3 of the quartic alpha + ... + epsilon z^4 shifted by 1/2,
    expressed in the unshifted coefficients.

    :return: (e+d+c+b)[(e+d+c)(e+d) - e b] - (2e+d)^2 a
    """
    eps_delta = epsilon + delta
    eps_delta_gamma = eps_delta + gamma
    return ((eps_delta_gamma + beta)
            * (eps_delta_gamma * eps_delta - epsilon * beta)
            - (2 * epsilon + delta) * (2 * epsilon + delta) * alpha)


def half_plane_quantities(coefficients: Sequence[Any]) -> Dict[str, Any]:
    """
    Quantities whose positivity places all roots of a polynomial of degree
    1 to 4 in Re z < 1/2, given a positive leading coefficient.

    The quantities are the Lienard-Chipart conditions of p(1/2 + z)
    rewritten in the coefficients of p itself:
        degree 1: p(1/2)
        degree 2: p'(1/2), p(1/2)
        degree 3: p(1/2), p'(1/2), Delta_2
        degree 4: p''(1/2)/2, p'(1/2), p(1/2), Delta_3

    :param coefficients: ascending coefficients alpha, beta, ... of p, as
        Fractions or polynomials in another variable
    :return: ordered dict of named quantities
    :raises ValueError: if the degree is not in 1..4
    """
    n = len(coefficients) - 1
    c = list(coefficients) + [0] * (5 - len(coefficients))
    alpha, beta, gamma, delta, epsilon = c[:5]
    h = HALF
    value = alpha + beta * h + gamma * h**2 + delta * h**3 + epsilon * h**4
    slope = beta + gamma + delta * Fraction(3, 4) + epsilon * h
    curvature = gamma + delta * Fraction(3, 2) + epsilon * Fraction(3, 2)
    if n == 1:
        return {"P(1/2)": value}
    elif n == 2:
        return {"P'(1/2)": slope, "P(1/2)": value}
    elif n == 3:
        return {"P(1/2)": value, "P'(1/2)": slope,
                "Delta_2": half_plane_delta2(alpha, beta, gamma, delta)}
    elif n == 4:
        return {"P''(1/2)/2": curvature, "P'(1/2)": slope, "P(1/2)": value,
                "Delta_3": half_plane_delta3(alpha, beta, gamma, delta,
                                             epsilon)}
    else:
        raise ValueError(f"closed-form quantities need degree 1..4, got {n}")


def shift_to_half(p: RatPoly) -> RatPoly:
    """Get p(1/2 + z)."""
    return p.compose_affine(1, HALF)


def _normalize_sign(p: RatPoly) -> RatPoly:
    if p.degree < 1:
        raise DegreeZeroError()
    return -p if p.leading < 0 else p


def roots_left_of_half(p: RatPoly) -> StabilityReport:
    """
    Strict test whether all roots of p lie in Re z < 1/2.

    The generic path runs Routh-Hurwitz on p(1/2 + z). For degrees 1 to 4
    the closed-form quantities of half_plane_quantities are evaluated as
    well and must agree with the generic verdict.

    :param p: polynomial of degree >= 1, a negative leading coefficient is
        flipped
    :return: report of the generic test, with the closed-form quantities as
        conditions when degree <= 4
    :raises DegreeZeroError: if p is constant
    :raises CriterionChainError: if the two paths disagree
    """
    p = _normalize_sign(p)
    shifted = shift_to_half(p)
    report = is_stable(shifted)
    if p.degree > 4:
        return report
    quantities = half_plane_quantities(p.coefficients)
    special = make_report(shifted, report.hurwitz_minors,
                          list(quantities.items()))
    if special.stable != report.stable:
        raise CriterionChainError(f"closed-form half-plane quantities "
                                  f"{quantities} contradict Hurwitz minors "
                                  f"{report.hurwitz_minors} for {p}")
    return special


def symmetric_factor(q: RatPoly) -> RatPoly:
    """
    Monic gcd of q(z) and q(-z).

    Its roots are the roots z of q such that -z is a root as well, with the
    smaller of the two multiplicities. This covers every root of q on the
    imaginary axis and every pair {z, -z} off the axis.

    :param q: nonzero polynomial
    :return: the factor, the constant 1 if there is none
    """
    return poly_gcd(q, q.compose_affine(-1, 0))


def imaginary_axis_count(q: RatPoly) -> int:
    """
    Number of roots of q on the imaginary axis, with multiplicity.

    The symmetric factor is z^k G(z^2) with G(0) != 0. A root of it lies on
    the axis iff it is 0 or z^2 is a negative real root of G, so the count
    is k plus twice the negative real roots of G.

    :param q: nonzero polynomial
    :return: the count
    """
    g = symmetric_factor(q)
    coeff = g.coefficients
    k = next(j for j, c in enumerate(coeff) if c != 0)
    rest = coeff[k:]
    if any(c != 0 for c in rest[1::2]):
        raise ArithmeticError(f"symmetric factor {g} has mixed parity")
    count = k
    for factor, mult in square_free_decomposition(RatPoly(rest[::2])):
        negative = Interval(-cauchy_bound(factor), 0)
        count += 2 * mult * sturm_count(factor, negative)
    return count


class ClosedHalfPlaneReport(NamedTuple):
    """
    Outcome of the exact test for roots in Re z > 1/2.

    Attributes
    ----------
    no_right_roots: bool
        whether p has no root with Re z > 1/2
    boundary_roots: int
        number of roots on Re z = 1/2, counted with multiplicity
    mirrored_roots: int
        number of roots in Re z > 1/2 whose mirror image 1 - z is a root,
        counted with multiplicity
    reduced: Optional[StabilityReport]
        Routh-Hurwitz report of the shifted polynomial with its symmetric
        factor removed, None if nothing remains
    """
    no_right_roots: bool
    boundary_roots: int
    mirrored_roots: int
    reduced: Optional[StabilityReport]


def closed_half_plane_test(p: RatPoly) -> ClosedHalfPlaneReport:
    """
    Exact test whether p vanishes somewhere in Re z > 1/2.

    The symmetric factor of q(z) = p(1/2 + z) holds the roots on the axis
    and the mirrored pairs {z, -z}, one of which lies to the right. The
    remaining factor has neither, hence it is Hurwitz stable iff it has no
    root with Re z > 0.

    :param p: polynomial of degree >= 1
    :return: the report
    :raises DegreeZeroError: if p is constant
    """
    shifted = shift_to_half(_normalize_sign(p))
    sym = symmetric_factor(shifted)
    reduced, remainder = poly_divmod(shifted, sym)
    if not remainder.is_zero():
        raise ArithmeticError(f"{sym} does not divide {shifted}")
    on_axis = imaginary_axis_count(shifted)
    mirrored = (sym.degree - on_axis) // 2
    report = is_stable(reduced) if reduced.degree >= 1 else None
    no_right = mirrored == 0 and (report is None or report.stable)
    return ClosedHalfPlaneReport(no_right, on_axis, mirrored, report)
