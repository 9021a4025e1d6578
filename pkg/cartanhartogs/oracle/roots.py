"""Numeric complex roots of rational polynomials."""

from fractions import Fraction
from typing import Any, List, NamedTuple, Tuple

import mpmath
import numpy as np

from ..base.constants import (MP_DPS, ROOT_TOL, ROOT_MAX_STEPS,
                              ROOT_EXTRA_PREC, AMBIGUITY_FACTOR)
from ..base.exactmath import RatPoly, square_free_decomposition
from ..base.exceptions import (DegreeZeroError, OracleNonConvergenceError,
                               warn_boundary_ambiguity)


__all__ = ["numeric_roots", "RootClassification", "classify_roots",
           "random_rooted_polynomial"]


def _to_mpf(c: Fraction) -> mpmath.mpf:
    return mpmath.mpf(c.numerator) / c.denominator


def _residual(coeff: List[mpmath.mpf], root: mpmath.mpc) -> mpmath.mpf:
    """
    Relative residual |p(root)| / sum_i |a_i| |root|^i.

    :param coeff: coefficients in descending order
    :param root: approximate root
    :return: the residual
    """
    value = mpmath.polyval(coeff, root)
    scale = mpmath.polyval([abs(c) for c in coeff], abs(root))
    return abs(value) / scale


def _roots_square_free(p: RatPoly, tol: float, max_steps: int,
                       extra_prec: int) -> List[mpmath.mpc]:
    coeff = [_to_mpf(c) for c in reversed(p.coefficients)]
    if p.degree == 1:
        return [mpmath.mpc(-coeff[1] / coeff[0])]
    roots = None
    for steps, prec in ((max_steps, extra_prec),
                        (4 * max_steps, 2 * extra_prec)):
        try:
            roots = mpmath.polyroots(coeff, maxsteps=steps, cleanup=True,
                                     extraprec=prec)
        except mpmath.libmp.NoConvergence:
            continue
        if all(_residual(coeff, mpmath.mpc(r)) < tol for r in roots):
            break
        roots = None
    if roots is None:
        raise OracleNonConvergenceError(p.degree, f"no convergence within "
                                                  f"{4 * max_steps} steps")
    return [mpmath.mpc(r) for r in roots]


def numeric_roots(p: RatPoly, tol: float = ROOT_TOL, dps: int = MP_DPS,
                  max_steps: int = ROOT_MAX_STEPS,
                  extra_prec: int = ROOT_EXTRA_PREC) -> List[complex]:
    """
    Get all complex roots of p, repeated according to multiplicity.

    Roots at the origin are split off exactly and the remaining factor is
    decomposed into square-free parts. Each part is solved by the
    Durand-Kerner iteration of mpmath.polyroots at dps digits. If the
    iteration fails or leaves a relative residual |p(r)| / sum|a_i||r|^i
    above tol, one retry runs with four times the steps and twice the extra
    precision.

    :param p: polynomial of degree >= 1
    :param tol: accepted relative residual
    :param dps: decimal digits of the iteration
    :param max_steps: iteration cap of the first attempt
    :param extra_prec: extra bits of working precision of the first attempt
    :return: roots sorted by real part, then imaginary part
    :raises DegreeZeroError: if p is constant
    :raises OracleNonConvergenceError: if the retry fails as well
    """
    if p.degree < 1:
        raise DegreeZeroError()
    num_zero = next(i for i, c in enumerate(p.coefficients) if c != 0)
    roots = [0j] * num_zero
    reduced = RatPoly(p.coefficients[num_zero:])
    with mpmath.workdps(dps):
        for factor, mult in square_free_decomposition(reduced):
            for r in _roots_square_free(factor, tol, max_steps, extra_prec):
                roots.extend([complex(r)] * mult)
    return sorted(roots, key=lambda z: (z.real, z.imag))


class RootClassification(NamedTuple):
    """
    Roots split by the vertical line Re z = center.

    Attributes
    ----------
    left: List[complex]
        roots with Re z < center - margin
    right: List[complex]
        roots with Re z > center + margin
    ambiguous: List[complex]
        roots within margin of the line
    """
    left: List[complex]
    right: List[complex]
    ambiguous: List[complex]


def classify_roots(roots: List[complex], tol: float = ROOT_TOL,
                   center: float = 0.5,
                   factor: float = AMBIGUITY_FACTOR) -> RootClassification:
    """
    Classify numeric roots with respect to Re z = center.

    Roots with |Re z - center| < factor * tol are boundary-ambiguous: they
    are excluded from both strict counts and reported with a
    BoundaryAmbiguityWarning.

    :param roots: numeric roots
    :param tol: tolerance of the roots
    :param center: real part of the separating line
    :param factor: width of the ambiguity band in units of tol
    :return: the classification
    """
    margin = factor * tol
    left, right, ambiguous = [], [], []
    for r in roots:
        shift = complex(r).real - center
        if abs(shift) < margin:
            ambiguous.append(r)
        elif shift < 0:
            left.append(r)
        else:
            right.append(r)
    if ambiguous:
        warn_boundary_ambiguity(ambiguous, center)
    return RootClassification(left, right, ambiguous)


def random_rooted_polynomial(rng: np.random.Generator, degree: int,
                             center: Fraction = Fraction(1, 2),
                             margin: Fraction = Fraction(1, 1000),
                             spread: int = 4,
                             denominator: int = 64) -> Tuple[RatPoly,
                                                             List[complex]]:
    """
    Build a rational polynomial with roots at known positions.

    Roots are either rational or conjugate pairs a +- bi with rational a and
    b, drawn on a grid of step 1/denominator, real parts in
    [center - spread, center + spread] and at distance >= margin from
    Re z = center.

    :param rng: random number generator
    :param degree: degree of the polynomial, >= 1
    :param center: real part of the line the roots avoid
    :param margin: minimal distance of real parts to the line
    :param spread: half-width of the window of real parts
    :param denominator: denominator of the grid
    :return: (polynomial, its roots as complex numbers)
    :raises ValueError: if degree < 1
    """
    if degree < 1:
        raise ValueError(f"degree {degree} should be >= 1")

    def _real_part() -> Fraction:
        while True:
            num = int(rng.integers(-spread * denominator,
                                   spread * denominator + 1))
            value = center + Fraction(num, denominator)
            if abs(value - center) >= margin:
                return value

    p = RatPoly.constant(int(rng.integers(1, 10)))
    roots = []
    remaining = degree
    while remaining > 0:
        re = _real_part()
        if remaining >= 2 and rng.random() < 0.5:
            im = Fraction(int(rng.integers(1, spread * denominator + 1)),
                          denominator)
            p = p * RatPoly((re * re + im * im, -2 * re, 1))
            roots.extend([complex(re, im), complex(re, -im)])
            remaining -= 2
        else:
            p = p * RatPoly((-re, 1))
            roots.append(complex(re))
            remaining -= 1
    return p, roots
