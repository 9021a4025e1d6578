"""Raising-factorial decomposition of chi(k mu) and the polynomial P_mu^m."""

from fractions import Fraction
from typing import Any, List, Sequence

from ..base.domains import DomainSpec, hua_polynomial
from ..base.exactmath import RatPoly, rising_factorial, to_rational
from ..base.exceptions import OrderOutOfRangeError, WrongDegreeError
from ..localization.halfplane import half_plane_delta2, half_plane_delta3


__all__ = ["MuPoly", "EtaMuPoly", "decompose_chi", "c_coefficients",
           "representative_polynomial", "q_poly", "derivative_at_half",
           "normalized_derivative", "normalized_derivatives", "q_poly_in_m", "hurwitz_quantity",
           "normalized_hurwitz_quantity", "divide_monomial"]


MuPoly = RatPoly
HALF = Fraction(1, 2)
MU = RatPoly.monomial(1)


def divide_monomial(p: RatPoly, k: int) -> RatPoly:
    """
    Exact division of p by x**k.

    :param p: polynomial
    :param k: power of the monomial
    :return: p / x**k
    :raises ValueError: if x**k does not divide p
    """
    if any(c != 0 for c in p.coefficients[:k]):
        raise ValueError(f"x^{k} does not divide {p}")
    return RatPoly(p.coefficients[k:])


class EtaMuPoly:
    """
    Polynomial in eta whose coefficients are polynomials in mu.

    Attributes
    ----------
    _eta_coeff: Tuple[MuPoly, ...]
        coefficient of eta^j as a polynomial in mu, j = 0 .. d
    """
    __slots__ = ("_eta_coeff",)

    def __init__(self, eta_coefficients: Sequence[MuPoly]) -> None:
        """
        :param eta_coefficients: coefficient of eta^j in mu, ascending in j
        """
        self._eta_coeff = tuple(eta_coefficients)

    @property
    def eta_coefficients(self):
        """Interface for the '_eta_coeff' attribute."""
        return self._eta_coeff

    @property
    def degree_eta(self) -> int:
        """Degree in eta, -1 for the zero polynomial."""
        for j in range(len(self._eta_coeff) - 1, -1, -1):
            if not self._eta_coeff[j].is_zero():
                return j
        return -1

    def at_mu(self, mu: Any) -> RatPoly:
        """
        Instantiate mu to get a polynomial in eta.

        :param mu: rational value of mu
        :return: the polynomial in eta
        """
        mu = to_rational(mu)
        return RatPoly(c(mu) for c in self._eta_coeff)

    def at_eta(self, eta: Any) -> MuPoly:
        """
        Substitute eta to get a polynomial in mu.

        :param eta: rational value of eta
        :return: the polynomial in mu
        """
        eta = to_rational(eta)
        result = RatPoly()
        for c in reversed(self._eta_coeff):
            result = result * eta + c
        return result

    def derivative_eta(self, order: int = 1) -> "EtaMuPoly":
        """Derivative of given order with respect to eta."""
        coeff = list(self._eta_coeff)
        for _ in range(order):
            coeff = [c * i for i, c in enumerate(coeff)][1:]
        return EtaMuPoly(coeff)

    def __eq__(self, other: Any) -> bool:
        if not isinstance(other, EtaMuPoly):
            return NotImplemented
        n = max(len(self._eta_coeff), len(other._eta_coeff))
        pad = RatPoly()
        return all((self._eta_coeff[j] if j < len(self._eta_coeff) else pad)
                   == (other._eta_coeff[j] if j < len(other._eta_coeff)
                       else pad) for j in range(n))

    def __hash__(self) -> int:
        return hash(self._eta_coeff)

    def __str__(self) -> str:
        terms = []
        for j, c in enumerate(self._eta_coeff):
            if c.is_zero():
                continue
            power = "" if j == 0 else (" eta" if j == 1 else f" eta^{j}")
            terms.append(f"({c.to_string('mu')}){power}")
        return " + ".join(terms) if terms else "0"


def decompose_chi(spec: DomainSpec) -> List[MuPoly]:
    """
    Expand chi(k mu) = sum_j mu^j C_{d-j}(mu) (k+1)_j.

    chi(k mu) is first expanded in powers of k with coefficients in mu, the
    monomial basis is then converted to raising factorials (k+1)_j by
    back-substitution from the top degree down.

    :param spec: domain specification
    :return: [C_0, C_1, ..., C_d] as polynomials in mu
    """
    chi = hua_polynomial(spec)
    d = spec.d
    remainder = [chi[i] * MU ** i for i in range(d + 1)]
    k = RatPoly.monomial(1)
    c_list = [RatPoly()] * (d + 1)
    for j in range(d, -1, -1):
        top = remainder[j]
        c_list[d-j] = divide_monomial(top, j)
        basis = rising_factorial(k, j)
        for i in range(j + 1):
            remainder[i] = remainder[i] - top * basis[i]
    return c_list


def c_coefficients(spec: DomainSpec) -> List[MuPoly]:
    """
    Coefficients c_j(mu) = j! mu^j C_{d-j}(mu).

    :param spec: domain specification
    :return: [c_0, ..., c_d]
    """
    c_list = decompose_chi(spec)
    d = spec.d
    return [rising_factorial(0, j) * MU ** j * c_list[d-j]
            for j in range(d + 1)]


def representative_polynomial(spec: DomainSpec, m: int) -> EtaMuPoly:
    """
    P_mu^m(eta) = sum_j (m+1)_j mu^j C_{d-j}(mu) eta^j.

    :param spec: domain specification
    :param m: fiber dimension, m >= 0
    :return: P_mu^m as a polynomial in (eta, mu)
    :raises ValueError: if m < 0
    """
    if m < 0:
        raise ValueError(f"fiber dimension m = {m} should be >= 0")
    c_list = decompose_chi(spec)
    d = spec.d
    return EtaMuPoly([rising_factorial(Fraction(m), j) * MU ** j * c_list[d-j]
                      for j in range(d + 1)])


def q_poly(spec: DomainSpec, m: int) -> MuPoly:
    """
    q_m(mu) = P_mu^m(1/2).

    :param spec: domain specification
    :param m: fiber dimension
    :return: q_m as a polynomial in mu
    """
    return representative_polynomial(spec, m).at_eta(HALF)


def derivative_at_half(spec: DomainSpec, m: int, order: int) -> MuPoly:
    """
    k-th eta-derivative of P_mu^m at eta = 1/2, not normalized.

    :param spec: domain specification
    :param m: fiber dimension
    :param order: derivative order k, 1 <= k <= d
    :return: the derivative as a polynomial in mu
    :raises OrderOutOfRangeError: if order is out of range
    """
    if not 1 <= order <= spec.d:
        raise OrderOutOfRangeError(order, spec.d)
    return representative_polynomial(spec, m).derivative_eta(order).at_eta(
        HALF)


def normalized_derivative(spec: DomainSpec, m: int, order: int) -> MuPoly:
    """
    q_m^k(mu): derivative_at_half divided by (m+1)_k mu^k.

    :param spec: domain specification
    :param m: fiber dimension
    :param order: derivative order k, 1 <= k <= d
    :return: the normalized derivative as a polynomial in mu
    """
    raw = derivative_at_half(spec, m, order)
    return divide_monomial(raw / rising_factorial(Fraction(m), order), order)


def normalized_derivatives(poly: EtaMuPoly, m: int) -> List[MuPoly]:
    """
    q_m^1 ... q_m^d of an already built P_mu^m.

    :param poly: representative_polynomial(spec, m)
    :param m: fiber dimension
    :return: list of normalized derivatives, order 1 first
    """
    result = []
    for order in range(1, poly.degree_eta + 1):
        raw = poly.derivative_eta(order).at_eta(HALF)
        result.append(divide_monomial(
            raw / rising_factorial(Fraction(m), order), order))
    return result


def q_poly_in_m(spec: DomainSpec) -> List[RatPoly]:
    """
    q_m(mu) with symbolic m.

    :param spec: domain specification
    :return: list whose k-th entry is the coefficient of mu^k in q_m(mu),
        as a polynomial in m
    """
    c_list = decompose_chi(spec)
    d = spec.d
    m_var = RatPoly.monomial(1)
    result = [RatPoly() for _ in range(d + 1)]
    for j in range(d + 1):
        weight = rising_factorial(m_var, j) * HALF ** j
        for i, c in enumerate(c_list[d-j].coefficients):
            result[i+j] = result[i+j] + weight * c
    return result


def hurwitz_quantity(spec: DomainSpec, m: int) -> MuPoly:
    """
    Closed-form half-plane determinant of P_mu^m as a polynomial in mu.

    For d = 3 this is Delta_2 = (g+e)(b+g+e) - a e, for d = 4 it is Delta_3
    of half_plane_delta3, both evaluated on the mu-polynomial coefficients
    of P_mu^m.

    :param spec: domain specification with d in (3, 4)
    :param m: fiber dimension
    :return: R_m (d = 3) or F_m (d = 4)
    :raises WrongDegreeError: if d is not 3 or 4
    """
    coeff = representative_polynomial(spec, m).eta_coefficients
    if spec.d == 3:
        return half_plane_delta2(*coeff)
    elif spec.d == 4:
        return half_plane_delta3(*coeff)
    else:
        raise WrongDegreeError(spec.d, "3 or 4")


def normalized_hurwitz_quantity(spec: DomainSpec, m: int) -> MuPoly:
    """
    S_m = R_m / ((m+1)_2 mu^3) for d = 3, G_m = F_m / ((m+1)(m+1)_3 mu^6)
    for d = 4.

    :param spec: domain specification with d in (3, 4)
    :param m: fiber dimension
    :return: the normalized quantity
    """
    raw = hurwitz_quantity(spec, m)
    if spec.d == 3:
        return divide_monomial(raw / rising_factorial(Fraction(m), 2), 3)
    return divide_monomial(raw / ((m + 1) * rising_factorial(Fraction(m), 3)),
                           6)
