"""Catalog of irreducible bounded symmetric domains and Hua polynomials."""

import re
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple, Union

import mpmath

from .constants import MP_DPS
from .exactmath import RatPoly
from .exceptions import UnknownTypeError, InvalidParametersError


__all__ = ["DomainSpec", "catalog_lookup", "catalog_names", "parse_domain",
           "dimension", "genus", "hua_factors", "hua_polynomial",
           "selberg_constant"]


def dimension(a: int, b: int, r: int) -> int:
    """
    Complex dimension d = r + r(r-1)a/2 + rb.

    :param a: multiplicity a
    :param b: multiplicity b
    :param r: rank
    :return: the dimension
    """
    return r + r * (r - 1) * a // 2 + r * b


def genus(a: int, b: int, r: int) -> int:
    """Genus g = 2 + a(r-1) + b."""
    return 2 + a * (r - 1) + b


@dataclass(frozen=True)
class DomainSpec:
    """
    Numerical invariants of a bounded symmetric domain.

    Attributes
    ----------
    a: int
        multiplicity a
    b: int
        multiplicity b
    r: int
        rank
    label: Optional[str]
        catalog name, e.g. 'I_{1,3}', None for raw triples
    d: int
        complex dimension, derived from (a, b, r)
    g: int
        genus, derived from (a, b, r)
    """
    a: int
    b: int
    r: int
    label: Optional[str] = None
    d: int = field(init=False)
    g: int = field(init=False)

    def __post_init__(self) -> None:
        for key in ("a", "b", "r"):
            value = getattr(self, key)
            if not isinstance(value, int) or isinstance(value, bool):
                raise InvalidParametersError(self.name,
                                             f"{key} should be an integer")
        if self.a < 0 or self.b < 0:
            raise InvalidParametersError(self.name,
                                         "multiplicities should be >= 0")
        if self.r < 1:
            raise InvalidParametersError(self.name, "rank should be >= 1")
        object.__setattr__(self, "d", dimension(self.a, self.b, self.r))
        object.__setattr__(self, "g", genus(self.a, self.b, self.r))

    @property
    def name(self) -> str:
        """Catalog label or the raw triple."""
        if self.label is not None:
            return self.label
        return f"(a,b,r)=({self.a},{self.b},{self.r})"

    @property
    def family(self) -> Optional[str]:
        """
        Realization family for kernel evaluation.

        :return: 'ball' for rank one (I_{1,n}), 'lie_ball' for rank two
            with b = 0 and a >= 1 (IV_n, n = a + 2), None otherwise
        """
        if self.r == 1:
            return "ball"
        if self.r == 2 and self.b == 0 and self.a >= 1:
            return "lie_ball"
        return None

    def __str__(self) -> str:
        return self.name


_PATTERNS = (
    ("I", re.compile(r"^I_\{?(\d+),(\d+)\}?$")),
    ("II", re.compile(r"^II_\{?(\d+)\}?$")),
    ("III", re.compile(r"^III_\{?(\d+)\}?$")),
    ("IV", re.compile(r"^IV_\{?(\d+)\}?$")),
)


def _type_one(p: int, q: int) -> Tuple[Tuple[int, int, int], int]:
    if p < 1 or p > q:
        raise InvalidParametersError(f"I_{{{p},{q}}}", "need 1 <= p <= q")
    return (2, q - p, p), p * q


def _type_two(n: int) -> Tuple[Tuple[int, int, int], int]:
    if n < 2:
        raise InvalidParametersError(f"II_{n}", "need n >= 2")
    return (4, 2 if n % 2 else 0, n // 2), n * (n - 1) // 2


def _type_three(n: int) -> Tuple[Tuple[int, int, int], int]:
    if n < 1:
        raise InvalidParametersError(f"III_{n}", "need n >= 1")
    return (1, 0, n), n * (n + 1) // 2


def _type_four(n: int) -> Tuple[Tuple[int, int, int], int]:
    if n < 3:
        raise InvalidParametersError(f"IV_{n}", "need n >= 3")
    return (n - 2, 0, 2), n


def catalog_lookup(name: str) -> DomainSpec:
    """
    Get the invariants of a named domain type.

    :param name: 'I_{p,q}' (p <= q), 'II_n', 'III_n', 'IV_n', 'EV' or 'EVI'
    :return: the domain specification
    :raises UnknownTypeError: if name does not match the grammar
    :raises InvalidParametersError: if the parameters are illegal
    """
    text = name.strip().replace(" ", "")
    if text == "EV":
        (a, b, r), known_d, label = (6, 4, 2), 16, "EV"
    elif text == "EVI":
        (a, b, r), known_d, label = (8, 0, 3), 27, "EVI"
    else:
        for kind, pattern in _PATTERNS:
            match = pattern.match(text)
            if match is not None:
                args = [int(_) for _ in match.groups()]
                break
        else:
            raise UnknownTypeError(name)
        if kind == "I":
            (a, b, r), known_d = _type_one(*args)
            label = f"I_{{{args[0]},{args[1]}}}"
        elif kind == "II":
            (a, b, r), known_d = _type_two(*args)
            label = f"II_{args[0]}"
        elif kind == "III":
            (a, b, r), known_d = _type_three(*args)
            label = f"III_{args[0]}"
        else:
            (a, b, r), known_d = _type_four(*args)
            label = f"IV_{args[0]}"
    spec = DomainSpec(a, b, r, label)
    if spec.d != known_d:
        raise InvalidParametersError(label, f"dimension {spec.d} from "
                                            f"invariants differs from "
                                            f"{known_d}")
    return spec


def catalog_names(max_dim: int = 27) -> List[str]:
    """
    Enumerate catalog names with dimension not above max_dim.

    Isomorphic entries (e.g. III_2 and IV_3) are all listed.

    :param max_dim: upper bound of dimension
    :return: list of names
    """
    names = []
    for p in range(1, max_dim + 1):
        for q in range(p, max_dim // p + 1):
            names.append(f"I_{{{p},{q}}}")
    n = 2
    while n * (n - 1) // 2 <= max_dim:
        names.append(f"II_{n}")
        n += 1
    n = 1
    while n * (n + 1) // 2 <= max_dim:
        names.append(f"III_{n}")
        n += 1
    names.extend(f"IV_{n}" for n in range(3, max_dim + 1))
    if max_dim >= 16:
        names.append("EV")
    if max_dim >= 27:
        names.append("EVI")
    return names


def parse_domain(name: Optional[str] = None,
                 raw: Optional[Sequence[int]] = None) -> DomainSpec:
    """
    Build a domain specification from a name or a raw (a, b, r) triple.

    :param name: catalog name
    :param raw: (a, b, r), used when given
    :return: the domain specification
    :raises UnknownTypeError: if neither is given or name is unknown
    """
    if raw is not None:
        a, b, r = (int(_) for _ in raw)
        return DomainSpec(a, b, r)
    if name is None:
        raise UnknownTypeError("<none>")
    return catalog_lookup(name)


def hua_factors(spec: DomainSpec) -> List[Tuple[Fraction, int]]:
    """
    Linear factors (s + c) of the Hua polynomial with multiplicities.

    The j-th block (s+1+(j-1)a/2)_{1+b+(r-j)a} contributes the offsets
    c = 1 + (j-1)a/2 + i for i = 0 .. b+(r-j)a.

    :param spec: domain specification
    :return: sorted list of (c, multiplicity)
    """
    offsets = Counter()
    for j in range(1, spec.r + 1):
        start = 1 + Fraction((j - 1) * spec.a, 2)
        for i in range(1 + spec.b + (spec.r - j) * spec.a):
            offsets[start + i] += 1
    return sorted(offsets.items())


def hua_polynomial(spec: DomainSpec) -> RatPoly:
    """
    Hua polynomial chi(s) = prod_j (s+1+(j-1)a/2)_{1+b+(r-j)a}.

    :param spec: domain specification
    :return: chi as a polynomial in s of degree spec.d
    """
    chi = RatPoly.constant(1)
    for c, mult in hua_factors(spec):
        chi = chi * RatPoly((c, 1)) ** mult
    return chi


def selberg_constant(a: int, b: int, r: int,
                     dps: int = MP_DPS) -> Union[mpmath.mpf, float]:
    """
    Gamma product prod_j G(b+1+(j-1)a/2) G(ja/2+1) / G(a/2+1).

    :param a: multiplicity a
    :param b: multiplicity b
    :param r: rank
    :param dps: decimal digits of the evaluation
    :return: the constant as mpmath.mpf
    """
    with mpmath.workdps(dps):
        half_a = mpmath.mpf(a) / 2
        result = mpmath.mpf(1)
        for j in range(1, r + 1):
            result *= (mpmath.gamma(b + 1 + (j - 1) * half_a)
                       * mpmath.gamma(j * half_a + 1)
                       / mpmath.gamma(half_a + 1))
        return +result
