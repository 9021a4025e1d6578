"""Exception classes used through the package."""

from warnings import warn


__all__ = ["DomainError", "UnknownTypeError", "InvalidParametersError",
           "PolynomialError", "NonSquareFreeError",
           "ToleranceNotPositiveError", "OrderOutOfRangeError",
           "LeadingCoefficientNotPositiveError", "WrongDegreeError",
           "DegreeZeroError", "MuNotPositiveError",
           "SearchLimitExceededError", "BoundaryMuError",
           "CriterionChainError", "OracleError", "OracleNonConvergenceError",
           "OracleDisagreementError", "QuadratureBudgetExceededError",
           "KernelError", "UnsupportedTypeError", "PointOutsideDomainError",
           "BranchCutError", "BoundaryAmbiguityWarning",
           "QuadratureWarning", "warn_boundary_ambiguity"]


class DomainError(Exception):
    """Base class for errors on domain specifications."""
    pass


class UnknownTypeError(DomainError):
    """Exception for a type name outside the catalog grammar."""
    def __init__(self, name):
        super().__init__()
        self._name = name

    def __str__(self):
        return f"unknown domain type '{self._name}'"


class InvalidParametersError(DomainError):
    """Exception for illegal parameters of a domain type or triple."""
    def __init__(self, name, reason):
        super().__init__()
        self._name = name
        self._reason = reason

    def __str__(self):
        return f"invalid parameters for {self._name}: {self._reason}"


class PolynomialError(Exception):
    """Base class for errors in exact polynomial algorithms."""
    pass


class NonSquareFreeError(PolynomialError):
    """Exception for Sturm counting on a polynomial with repeated roots."""
    def __init__(self, gcd_degree):
        super().__init__()
        self._gcd_degree = gcd_degree

    def __str__(self):
        return f"polynomial is not square-free, gcd(p, p') has degree " \
               f"{self._gcd_degree}"


class ToleranceNotPositiveError(PolynomialError):
    """Exception for a non-positive refinement tolerance."""
    def __init__(self, tol):
        super().__init__()
        self._tol = tol

    def __str__(self):
        return f"tolerance {self._tol} should be positive"


class OrderOutOfRangeError(PolynomialError):
    """Exception for derivative orders outside 1..d."""
    def __init__(self, order, d):
        super().__init__()
        self._order = order
        self._d = d

    def __str__(self):
        return f"derivative order {self._order} not in [1, {self._d}]"


class LeadingCoefficientNotPositiveError(PolynomialError):
    """Exception for Hurwitz analysis of a polynomial with a_0 <= 0."""
    def __init__(self, a0):
        super().__init__()
        self._a0 = a0

    def __str__(self):
        return f"leading coefficient {self._a0} should be positive"


class WrongDegreeError(PolynomialError):
    """Exception for a criterion applied to a polynomial of wrong degree."""
    def __init__(self, degree, expected):
        super().__init__()
        self._degree = degree
        self._expected = expected

    def __str__(self):
        return f"degree {self._degree} while {self._expected} is expected"


class DegreeZeroError(PolynomialError):
    """Exception for root localization of a constant polynomial."""
    def __str__(self):
        return "polynomial has no roots to localize (degree < 1)"


class MuNotPositiveError(ValueError):
    """Exception for non-positive exponent mu."""
    def __init__(self, mu):
        super().__init__()
        self._mu = mu

    def __str__(self):
        return f"mu = {self._mu} should be positive"


class SearchLimitExceededError(RuntimeError):
    """Exception for m_omega search exceeding its cap."""
    def __init__(self, label, cap):
        super().__init__()
        self._label = label
        self._cap = cap

    def __str__(self):
        return f"no m_omega found for {self._label} below m = {self._cap}"


class BoundaryMuError(ValueError):
    """Exception for counting roots exactly at a threshold."""
    def __init__(self, label, m, mu):
        super().__init__()
        self._label = label
        self._m = m
        self._mu = mu

    def __str__(self):
        return f"mu = {self._mu} is a root of q_{self._m} for " \
               f"{self._label}, half-plane count undefined"


class CriterionChainError(RuntimeError):
    """Exception for disagreement between equivalent exact criteria."""
    def __init__(self, detail):
        super().__init__()
        self._detail = detail

    def __str__(self):
        return f"equivalent criteria disagree: {self._detail}"


class OracleError(Exception):
    """Base class for errors in the numeric oracle."""
    pass


class OracleNonConvergenceError(OracleError):
    """Exception for root iteration exceeding its cap or residual bound."""
    def __init__(self, degree, detail):
        super().__init__()
        self._degree = degree
        self._detail = detail

    def __str__(self):
        return f"numeric roots of degree-{self._degree} polynomial not " \
               f"converged: {self._detail}"


class OracleDisagreementError(OracleNonConvergenceError):
    """Exception for numeric roots contradicting the exact pipeline."""
    def __str__(self):
        return f"numeric roots of degree-{self._degree} polynomial " \
               f"contradict exact localization: {self._detail}"


class QuadratureBudgetExceededError(OracleError):
    """Exception for adaptive quadrature failing within its budget."""
    def __init__(self, limit, detail):
        super().__init__()
        self._limit = limit
        self._detail = detail

    def __str__(self):
        return f"quadrature not converged within {self._limit} " \
               f"subintervals: {self._detail}"


class KernelError(Exception):
    """Base class for errors in Bergman kernel evaluation."""
    pass


class UnsupportedTypeError(KernelError):
    """Exception for domains without an implemented generic norm."""
    def __init__(self, label):
        super().__init__()
        self._label = label

    def __str__(self):
        return f"generic norm not available for {self._label}, only " \
               f"I_{{1,n}} and IV_n are supported"


class PointOutsideDomainError(KernelError):
    """Exception for points violating the Cartan-Hartogs membership."""
    def __init__(self, detail):
        super().__init__()
        self._detail = detail

    def __str__(self):
        return f"point outside domain: {self._detail}"


class BranchCutError(KernelError):
    """Exception for a generic norm leaving the right half-plane."""
    def __init__(self, value):
        super().__init__()
        self._value = value

    def __str__(self):
        return f"N(z,w) = {self._value} crosses the principal branch cut"


class BoundaryAmbiguityWarning(UserWarning):
    """Warning for numeric roots too close to Re = 1/2 to classify."""
    pass


class QuadratureWarning(UserWarning):
    """Warning for quadrature error estimates above the requested bound."""
    pass


def warn_boundary_ambiguity(roots, center: float) -> None:
    """
    Issue a BoundaryAmbiguityWarning for the given roots.

    :param roots: ambiguous roots
    :param center: real part of the separating line
    :return: None
    """
    text = ", ".join(f"{complex(r):.6g}" for r in roots)
    warn(f"roots {text} lie too close to Re = {center} and are excluded "
         f"from strict counts", BoundaryAmbiguityWarning, stacklevel=3)
