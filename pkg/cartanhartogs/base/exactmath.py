"""Exact rational polynomials and Sturm-based real-root isolation."""

from fractions import Fraction
from dataclasses import dataclass
from numbers import Rational as _RationalABC
from typing import Any, Iterable, List, Tuple, Union

import mpmath
import numpy as np

from .constants import NEWTON_GRID
from .exceptions import NonSquareFreeError, ToleranceNotPositiveError


__all__ = ["Rational", "RatPoly", "Interval", "to_rational", "poly_arith",
           "poly_compose_affine", "poly_divmod", "poly_gcd",
           "square_free_decomposition", "square_free_part", "sturm_sequence",
           "sign_variations", "cauchy_bound", "sturm_count",
           "isolate_real_roots", "isolate_positive_roots", "refine_root",
           "rising_factorial"]


Rational = Fraction
RationalLike = Union[int, Fraction, str]


def to_rational(value: Any) -> Fraction:
    """
    Convert value to an exact rational number.

    Strings may be integers, "p/q" or decimal/scientific notation, which
    are converted in base 10 without passing through binary floats. Floats
    are converted through their shortest decimal representation.

    :param value: int, Fraction, str or float
    :return: the exact rational
    :raises ValueError: if value cannot be parsed
    :raises TypeError: if value has an unsupported type
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("bool is not a rational number")
    if isinstance(value, (int, _RationalABC)):
        return Fraction(value)
    if isinstance(value, float):
        return Fraction(repr(value))
    if isinstance(value, str):
        return Fraction(value.strip().replace(" ", ""))
    raise TypeError(f"cannot convert {type(value).__name__} to rational")


def _sign(x: Fraction) -> int:
    return (x > 0) - (x < 0)


class RatPoly:
    """
    Dense univariate polynomial with exact rational coefficients.

    Instances are immutable. Coefficients are stored in ascending order of
    degree, i.e. coefficients[i] is the coefficient of x**i. Trailing zeros
    are stripped so that the zero polynomial has no coefficients and degree
    -1.

    Attributes
    ----------
    _coeff: Tuple[Fraction, ...]
        coefficients in ascending order of degree
    """
    __slots__ = ("_coeff",)

    def __init__(self, coefficients: Iterable[Any] = ()) -> None:
        """
        :param coefficients: coefficients in ascending order of degree
        """
        coeff = [to_rational(c) for c in coefficients]
        while coeff and coeff[-1] == 0:
            coeff.pop()
        self._coeff = tuple(coeff)

    @classmethod
    def constant(cls, c: Any) -> "RatPoly":
        """Build the constant polynomial c."""
        return cls((c,))

    @classmethod
    def monomial(cls, degree: int, c: Any = 1) -> "RatPoly":
        """Build c * x**degree."""
        return cls([0] * degree + [c])

    @classmethod
    def from_roots(cls, roots: Iterable[Any], leading: Any = 1) -> "RatPoly":
        """
        Build leading * prod(x - root).

        :param roots: rational roots
        :param leading: leading coefficient
        :return: the product polynomial
        """
        result = cls.constant(leading)
        for root in roots:
            result = result * cls((-to_rational(root), 1))
        return result

    # Container protocol
    @property
    def coefficients(self) -> Tuple[Fraction, ...]:
        """Interface for the '_coeff' attribute."""
        return self._coeff

    @property
    def degree(self) -> int:
        """Degree of the polynomial, -1 for the zero polynomial."""
        return len(self._coeff) - 1

    @property
    def leading(self) -> Fraction:
        """Leading coefficient, 0 for the zero polynomial."""
        return self._coeff[-1] if self._coeff else Fraction(0)

    def is_zero(self) -> bool:
        return not self._coeff

    def __len__(self) -> int:
        return len(self._coeff)

    def __iter__(self):
        return iter(self._coeff)

    def __getitem__(self, i: int) -> Fraction:
        if 0 <= i < len(self._coeff):
            return self._coeff[i]
        return Fraction(0)

    def __eq__(self, other: Any) -> bool:
        if isinstance(other, RatPoly):
            return self._coeff == other._coeff
        try:
            return self == RatPoly.constant(to_rational(other))
        except (TypeError, ValueError):
            return NotImplemented

    def __hash__(self) -> int:
        return hash(self._coeff)

    def __bool__(self) -> bool:
        return bool(self._coeff)

    # Ring operations
    @staticmethod
    def _lift(other: Any) -> "RatPoly":
        if isinstance(other, RatPoly):
            return other
        return RatPoly.constant(to_rational(other))

    def __add__(self, other: Any) -> "RatPoly":
        try:
            other = self._lift(other)
        except TypeError:
            return NotImplemented
        n = max(len(self._coeff), len(other._coeff))
        return RatPoly(self[i] + other[i] for i in range(n))

    __radd__ = __add__

    def __neg__(self) -> "RatPoly":
        return RatPoly(-c for c in self._coeff)

    def __sub__(self, other: Any) -> "RatPoly":
        try:
            other = self._lift(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: Any) -> "RatPoly":
        return (-self) + other

    def __mul__(self, other: Any) -> "RatPoly":
        try:
            other = self._lift(other)
        except TypeError:
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return RatPoly()
        result = [Fraction(0)] * (len(self._coeff) + len(other._coeff) - 1)
        for i, a in enumerate(self._coeff):
            if a == 0:
                continue
            for j, b in enumerate(other._coeff):
                result[i+j] += a * b
        return RatPoly(result)

    __rmul__ = __mul__

    def __truediv__(self, scalar: Any) -> "RatPoly":
        if isinstance(scalar, RatPoly):
            quotient, remainder = poly_divmod(self, scalar)
            if not remainder.is_zero():
                raise ValueError(f"{scalar} does not divide {self}")
            return quotient
        scalar = to_rational(scalar)
        return RatPoly(c / scalar for c in self._coeff)

    def __pow__(self, n: int) -> "RatPoly":
        if n < 0:
            raise ValueError("negative powers are not polynomials")
        result, base = RatPoly.constant(1), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __divmod__(self, other: "RatPoly") -> Tuple["RatPoly", "RatPoly"]:
        return poly_divmod(self, other)

    def __floordiv__(self, other: "RatPoly") -> "RatPoly":
        return poly_divmod(self, other)[0]

    def __mod__(self, other: "RatPoly") -> "RatPoly":
        return poly_divmod(self, other)[1]

    # Evaluation and calculus
    def __call__(self, x: Any) -> Any:
        """
        Evaluate the polynomial at x with Horner's scheme.

        x may be anything supporting + and * with Fractions: Fractions,
        ints, floats, complex numbers, mpmath numbers or other RatPolys.
        Floats and complex numbers see coefficients converted to float.

        :param x: point of evaluation
        :return: value of the polynomial at x
        """
        if isinstance(x, (float, complex, np.ndarray, np.number)):
            coeff = [float(c) for c in self._coeff]
        elif isinstance(x, (mpmath.mpf, mpmath.mpc)):
            coeff = [mpmath.mpf(c.numerator) / c.denominator
                     for c in self._coeff]
        else:
            coeff = self._coeff
        result = 0 * x
        for c in reversed(coeff):
            result = result * x + c
        return result

    def derivative(self, order: int = 1) -> "RatPoly":
        """
        Get the derivative of given order.

        :param order: order of derivative
        :return: the derivative polynomial
        """
        coeff = list(self._coeff)
        for _ in range(order):
            coeff = [i * coeff[i] for i in range(1, len(coeff))]
        return RatPoly(coeff)

    def compose(self, inner: "RatPoly") -> "RatPoly":
        """Get self(inner(x))."""
        result = RatPoly()
        for c in reversed(self._coeff):
            result = result * inner + c
        return result

    def compose_affine(self, a: Any, b: Any) -> "RatPoly":
        """Get self(a*x + b)."""
        return poly_compose_affine(self, a, b)

    def monic(self) -> "RatPoly":
        """Divide by the leading coefficient."""
        if self.is_zero():
            return self
        return self / self.leading

    def sign_at(self, x: Fraction) -> int:
        """Sign of the polynomial at rational x."""
        return _sign(self(x))

    def sign_at_infinity(self, direction: int = 1) -> int:
        """Sign of the polynomial as x tends to direction * infinity."""
        if self.is_zero():
            return 0
        sign = _sign(self.leading)
        if direction < 0 and self.degree % 2 == 1:
            sign = -sign
        return sign

    # Printing
    def to_string(self, var: str = "x") -> str:
        """
        Render the polynomial in descending order of degree.

        :param var: name of the variable
        :return: string like 'x^2 + 3/2 x - 1'
        """
        if self.is_zero():
            return "0"
        terms = []
        for i in range(self.degree, -1, -1):
            c = self._coeff[i]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if i == 0:
                body = f"{mag}"
            else:
                power = var if i == 1 else f"{var}^{i}"
                body = power if mag == 1 else f"{mag} {power}"
            terms.append((sign, body))
        first_sign, first_body = terms[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in terms[1:]:
            text += f" {sign} {body}"
        return text

    def __str__(self) -> str:
        return self.to_string()

    def __repr__(self) -> str:
        return f"RatPoly([{', '.join(str(c) for c in self._coeff)}])"


@dataclass(frozen=True)
class Interval:
    """
    Half-open interval (lo, hi] with rational end points.

    When used as a root-isolating interval, the referenced polynomial has
    exactly one distinct real root in (lo, hi], of given multiplicity.

    Attributes
    ----------
    lo: Fraction
        lower bound, excluded
    hi: Fraction
        upper bound, included
    multiplicity: int
        multiplicity of the isolated root
    """
    lo: Fraction
    hi: Fraction
    multiplicity: int = 1

    def __post_init__(self) -> None:
        object.__setattr__(self, "lo", to_rational(self.lo))
        object.__setattr__(self, "hi", to_rational(self.hi))
        if self.lo > self.hi:
            raise ValueError(f"interval ({self.lo}, {self.hi}] is reversed")

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def midpoint(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def contains(self, x: Any) -> bool:
        """Check lo < x <= hi."""
        return self.lo < x <= self.hi


def rising_factorial(x: Any, k: int) -> Any:
    """
    Get (x+1)_k = (x+1)(x+2)...(x+k).

    NOTE: the raising factorial here is shifted, following the convention
    (s+1)_k of Hua polynomials. Pass x-1 to get the Pochhammer symbol (x)_k.

    :param x: number or RatPoly
    :param k: number of factors
    :return: the product, 1 for k = 0
    """
    result = x * 0 + 1
    for i in range(1, k + 1):
        result = result * (x + i)
    return result


def poly_arith(p: RatPoly, q: RatPoly, op: str) -> RatPoly:
    """
    Exact ring arithmetic on polynomials.

    :param p: left operand
    :param q: right operand
    :param op: 'add', 'sub' or 'mul'
    :return: result of the operation
    :raises ValueError: if op is unknown
    """
    if op == "add":
        return p + q
    elif op == "sub":
        return p - q
    elif op == "mul":
        return p * q
    else:
        raise ValueError(f"Illegal operation {op}")


def poly_compose_affine(p: RatPoly, a: Any, b: Any) -> RatPoly:
    """
    Compute p(a*x + b) exactly.

    :param p: polynomial to compose
    :param a: slope
    :param b: offset
    :return: the composed polynomial
    """
    return p.compose(RatPoly((to_rational(b), to_rational(a))))


def poly_divmod(p: RatPoly, q: RatPoly) -> Tuple[RatPoly, RatPoly]:
    """
    Euclidean division p = quotient * q + remainder.

    :param p: dividend
    :param q: divisor
    :return: (quotient, remainder) with deg remainder < deg q
    :raises ZeroDivisionError: if q is the zero polynomial
    """
    if q.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    remainder = list(p.coefficients)
    dq = q.degree
    lead = q.leading
    quotient = [Fraction(0)] * max(len(remainder) - dq, 0)
    for i in range(len(remainder) - 1, dq - 1, -1):
        c = remainder[i] / lead
        quotient[i-dq] = c
        if c != 0:
            for j in range(dq + 1):
                remainder[i-dq+j] -= c * q[j]
    return RatPoly(quotient), RatPoly(remainder[:dq])


def poly_gcd(p: RatPoly, q: RatPoly) -> RatPoly:
    """
    Monic greatest common divisor, zero only if both inputs are zero.

    :param p: 1st polynomial
    :param q: 2nd polynomial
    :return: monic gcd
    """
    while not q.is_zero():
        p, q = q, poly_divmod(p, q)[1].monic()
    return p.monic()


def square_free_decomposition(p: RatPoly) -> List[Tuple[RatPoly, int]]:
    """
    Yun's square-free decomposition.

    :param p: nonzero polynomial
    :return: list of (factor, multiplicity), factors monic, square-free and
        pairwise coprime, with p = leading * prod(factor**multiplicity);
        constant factors are omitted
    """
    if p.degree < 1:
        return []
    dp = p.derivative()
    a = poly_gcd(p, dp)
    b = p // a
    c = dp // a
    d = c - b.derivative()
    result = []
    i = 1
    while b.degree > 0:
        a = poly_gcd(b, d)
        if a.degree > 0:
            result.append((a, i))
        b = b // a
        c = d // a
        d = c - b.derivative()
        i += 1
    return result


def square_free_part(p: RatPoly) -> RatPoly:
    """Get p / gcd(p, p'), made monic."""
    if p.degree < 1:
        return p.monic()
    return (p // poly_gcd(p, p.derivative())).monic()


def sturm_sequence(p: RatPoly) -> List[RatPoly]:
    """
    Build the Sturm sequence p, p', -rem(p, p'), ...

    Each remainder is scaled by the reciprocal of the absolute value of its
    leading coefficient, which keeps the signs and bounds the growth of the
    coefficients.

    :param p: nonzero polynomial
    :return: the Sturm sequence
    """
    seq = [p, p.derivative()]
    while not seq[-1].is_zero() and seq[-1].degree > 0:
        rem = -poly_divmod(seq[-2], seq[-1])[1]
        if rem.is_zero():
            break
        seq.append(rem / abs(rem.leading))
    if seq[-1].is_zero():
        seq.pop()
    return seq


def sign_variations(values: Iterable[Any]) -> int:
    """
    Count sign changes in a sequence, ignoring zeros.

    :param values: sequence of numbers
    :return: number of sign changes
    """
    signs = [_sign(v) for v in values if v != 0]
    return sum(1 for s0, s1 in zip(signs, signs[1:]) if s0 != s1)


def cauchy_bound(p: RatPoly) -> Fraction:
    """
    Cauchy bound: every root satisfies |x| < 1 + max|a_i / a_n|.

    :param p: polynomial of degree >= 1
    :return: the bound
    """
    lead = abs(p.leading)
    return 1 + max(abs(c) / lead for c in p.coefficients[:-1])


def _check_square_free(p: RatPoly) -> None:
    g = poly_gcd(p, p.derivative())
    if g.degree > 0:
        raise NonSquareFreeError(g.degree)


def _count(seq: List[RatPoly], lo: Fraction, hi: Fraction) -> int:
    return (sign_variations(f(lo) for f in seq)
            - sign_variations(f(hi) for f in seq))


def sturm_count(p: RatPoly, iv: Interval) -> int:
    """
    Count the distinct real roots of p in (iv.lo, iv.hi].

    :param p: nonzero square-free polynomial
    :param iv: the interval
    :return: exact number of roots
    :raises NonSquareFreeError: if gcd(p, p') is not constant
    """
    if p.degree < 1:
        return 0
    _check_square_free(p)
    return _count(sturm_sequence(p), iv.lo, iv.hi)


def _isolate_square_free(p: RatPoly, iv: Interval,
                         multiplicity: int) -> List[Interval]:
    seq = sturm_sequence(p)
    result = []
    stack = [(iv.lo, iv.hi)]
    while stack:
        lo, hi = stack.pop()
        n = _count(seq, lo, hi)
        if n == 0:
            continue
        elif n == 1:
            result.append(Interval(lo, hi, multiplicity))
        else:
            mid = (lo + hi) / 2
            stack.append((mid, hi))
            stack.append((lo, mid))
    return result


def _shrink(p: RatPoly, iv: Interval) -> Interval:
    """Halve an isolating interval of the square-free p."""
    mid = iv.midpoint
    if _count(sturm_sequence(p), iv.lo, mid) == 1:
        return Interval(iv.lo, mid, iv.multiplicity)
    return Interval(mid, iv.hi, iv.multiplicity)


def isolate_real_roots(p: RatPoly, iv: Interval) -> List[Interval]:
    """
    Isolate the distinct real roots of p in (iv.lo, iv.hi].

    Repeated factors are split off by square-free decomposition, each root
    is reported once with its multiplicity, and intervals coming from
    different factors are shrunk until they are pairwise disjoint.

    :param p: nonzero polynomial
    :param iv: search interval
    :return: isolating intervals sorted in ascending order
    """
    tagged = []
    for factor, mult in square_free_decomposition(p):
        for root_iv in _isolate_square_free(factor, iv, mult):
            tagged.append([root_iv, factor])
    tagged.sort(key=lambda item: item[0].lo)
    overlap = True
    while overlap:
        overlap = False
        for left, right in zip(tagged, tagged[1:]):
            if left[0].hi > right[0].lo:
                overlap = True
                left[0] = _shrink(left[1], left[0])
                right[0] = _shrink(right[1], right[0])
        tagged.sort(key=lambda item: item[0].lo)
    return [item[0] for item in tagged]


def isolate_positive_roots(p: RatPoly) -> List[Interval]:
    """
    Isolate the distinct positive real roots of p.

    :param p: nonzero polynomial
    :return: isolating intervals inside (0, cauchy_bound], ascending
    """
    if p.degree < 1:
        return []
    return isolate_real_roots(p, Interval(0, cauchy_bound(p)))


def refine_root(p: RatPoly, iv: Interval, tol: Any) -> Fraction:
    """
    Refine the root isolated by iv to within tol.

    The bracket is halved by bisection on every step. A Newton iterate from
    the midpoint, snapped to a grid of the bracket, is tried first and kept
    only when it lies strictly inside the bracket.

    :param p: polynomial whose root is isolated by iv
    :param iv: isolating interval of exactly one root
    :param tol: positive tolerance
    :return: rational r inside iv with |r - root| < tol
    :raises ToleranceNotPositiveError: if tol <= 0
    """
    tol = to_rational(tol)
    if tol <= 0:
        raise ToleranceNotPositiveError(tol)
    p = square_free_part(p)
    lo, hi = iv.lo, iv.hi
    if p(hi) == 0:
        return hi

    # Make sure p(lo) != 0 so that signs bracket the root.
    if p(lo) == 0:
        seq = sturm_sequence(p)
        while True:
            mid = (lo + hi) / 2
            if p(mid) == 0:
                return mid
            if _count(seq, mid, hi) == 1:
                lo = mid
                break
            hi = mid
    sign_lo = p.sign_at(lo)
    dp = p.derivative()

    while hi - lo >= tol:
        mid = (lo + hi) / 2
        value = p(mid)
        if value == 0:
            return mid
        slope = dp(mid)
        if slope != 0:
            step = hi - lo
            newton = mid - value / slope
            newton = lo + step * Fraction(round((newton - lo) / step
                                                * NEWTON_GRID), NEWTON_GRID)
            if lo < newton < hi and newton != mid:
                nv = p(newton)
                if nv == 0:
                    return newton
                if _sign(nv) == sign_lo:
                    lo = newton
                else:
                    hi = newton
                if not (lo < mid < hi):
                    continue
        if _sign(value) == sign_lo:
            lo = mid
        else:
            hi = mid
    return (lo + hi) / 2
