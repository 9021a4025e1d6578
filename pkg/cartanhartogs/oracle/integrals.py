"""Monte-Carlo Hua integrals and quadrature of Selberg integrals."""

import math
import warnings
from typing import NamedTuple

import mpmath
import numpy as np
from scipy.integrate import quad, IntegrationWarning

from ..base.constants import (DEFAULT_SEED, MC_SAMPLES, MC_BATCH, QUAD_LIMIT,
                              QUAD_EPSABS, QUAD_EPSREL)
from ..base.domains import DomainSpec, hua_polynomial, selberg_constant
from ..base.exactmath import rising_factorial
from ..base.exceptions import QuadratureBudgetExceededError, QuadratureWarning
from ..kernel.norm import ball_samples
from ..parallel import MPIEnv


__all__ = ["MCEstimate", "hua_integral_mc", "SelbergCheck",
           "selberg_integral", "selberg_check"]


class MCEstimate(NamedTuple):
    """
    Monte-Carlo estimate of a normalized ball integral.

    Attributes
    ----------
    estimate: float
        sample mean of (1 - |z|^2)^s
    stderr: float
        standard error of the mean
    exact: float
        n! / (s+1)_n
    num_samples: int
        number of accepted samples over all processes
    """
    estimate: float
    stderr: float
    exact: float
    num_samples: int

    @property
    def deviation(self) -> float:
        """Deviation from the exact value in units of stderr."""
        if self.stderr == 0.0:
            return 0.0 if self.estimate == self.exact else math.inf
        return abs(self.estimate - self.exact) / self.stderr


def hua_integral_mc(n: int, s: float, samples: int = MC_SAMPLES,
                    seed: int = DEFAULT_SEED, batch: int = MC_BATCH,
                    enable_mpi: bool = False) -> MCEstimate:
    """
    Estimate the mean of (1 - |z|^2)^s over the unit ball of C^n.

    The exact value is chi(0)/chi(s) = n!/(s+1)_n for the ball I_{1,n}. The
    sample budget is split over MPI processes, each drawing from
    default_rng([seed, rank]).

    :param n: complex dimension, >= 1
    :param s: exponent, > -1
    :param samples: total number of accepted samples
    :param seed: seed of the random streams
    :param batch: number of samples drawn at once
    :param enable_mpi: whether to distribute sampling with MPI
    :return: the estimate
    :raises ValueError: if n < 1 or s <= -1
    """
    if n < 1:
        raise ValueError(f"dimension n = {n} should be >= 1")
    if s <= -1:
        raise ValueError(f"exponent s = {s} should be > -1")
    env = MPIEnv(enable_mpi=enable_mpi)
    rng = np.random.default_rng([seed, env.rank])
    num_local = len(env.dist_range(samples))
    sums = np.zeros(3)
    while num_local > 0:
        num = min(batch, num_local)
        z = ball_samples(rng, n, num)
        f = (1.0 - np.sum(np.abs(z)**2, axis=1)) ** s
        sums += [np.sum(f), np.sum(f**2), num]
        num_local -= num
    sums = env.all_reduce(sums)
    total = int(sums[2])
    mean = sums[0] / total
    var = max(sums[1] / total - mean**2, 0.0)
    stderr = math.sqrt(var / max(total - 1, 1))
    exact = math.factorial(n) / rising_factorial(float(s), n)
    return MCEstimate(float(mean), stderr, exact, total)


class SelbergCheck(NamedTuple):
    """
    Quadrature of a Selberg integral against its Gamma-product value.

    Attributes
    ----------
    value: float
        quadrature result
    error: float
        error estimate reported by the quadrature
    exact: float
        C(a,b,r)/chi(s)
    """
    value: float
    error: float
    exact: float

    @property
    def rel_deviation(self) -> float:
        """Relative deviation |value - exact| / |exact|."""
        return abs(self.value - self.exact) / abs(self.exact)


def _quad(func, lo, hi, wvar, limit, epsabs, epsrel):
    """Run quad with algebraic weight, turning warnings into errors."""
    with warnings.catch_warnings():
        warnings.simplefilter("error", IntegrationWarning)
        try:
            return quad(func, lo, hi, weight="alg", wvar=wvar, limit=limit,
                        epsabs=epsabs, epsrel=epsrel)
        except IntegrationWarning as err:
            raise QuadratureBudgetExceededError(limit, str(err)) from err


def selberg_integral(a: int, b: int, r: int, s: float,
                     limit: int = QUAD_LIMIT, epsabs: float = QUAD_EPSABS,
                     epsrel: float = QUAD_EPSREL):
    """
    Integrate prod_j (1-t_j)^s t_j^b prod_{j<k} |t_j-t_k|^a over [0,1]^r.

    The end point singularities are carried by the algebraic weights of
    QUADPACK. For r = 2 the integrand is symmetric, so twice the integral
    over t_2 < t_1 is taken, with weight t_2^b (t_1-t_2)^a inside.

    :param a: multiplicity a
    :param b: multiplicity b
    :param r: rank, 1 or 2
    :param s: exponent, > -1
    :param limit: maximal number of subintervals of each quadrature
    :param epsabs: absolute error goal
    :param epsrel: relative error goal
    :return: (value, error estimate)
    :raises ValueError: if r is not 1 or 2, or s <= -1
    :raises QuadratureBudgetExceededError: if quadrature fails to converge
    """
    if s <= -1:
        raise ValueError(f"exponent s = {s} should be > -1")
    if r == 1:
        return _quad(lambda t: 1.0, 0.0, 1.0, (b, s), limit, epsabs, epsrel)
    elif r == 2:
        inner_error = [0.0]

        def _inner(t1):
            value, error = _quad(lambda t2: (1.0 - t2) ** s, 0.0, t1, (b, a),
                                 limit, epsabs, epsrel)
            inner_error[0] = max(inner_error[0], error)
            return value

        value, error = _quad(_inner, 0.0, 1.0, (b, s), limit, epsabs, epsrel)
        return 2 * value, 2 * (error + inner_error[0])
    else:
        raise ValueError(f"quadrature is implemented for rank 1 and 2, "
                         f"got {r}")


def selberg_check(a: int, b: int, r: int, s: float,
                  limit: int = QUAD_LIMIT, epsabs: float = QUAD_EPSABS,
                  epsrel: float = QUAD_EPSREL) -> SelbergCheck:
    """
    Compare selberg_integral with C(a,b,r)/chi_{a,b,r}(s).

    :param a: multiplicity a
    :param b: multiplicity b
    :param r: rank, 1 or 2
    :param s: exponent, > -1
    :param limit: maximal number of subintervals of each quadrature
    :param epsabs: absolute error goal
    :param epsrel: relative error goal
    :return: the check
    :raises QuadratureBudgetExceededError: if quadrature fails to converge
    """
    value, error = selberg_integral(a, b, r, s, limit, epsabs, epsrel)
    chi = hua_polynomial(DomainSpec(a, b, r))
    exact = float(selberg_constant(a, b, r) / chi(mpmath.mpf(s)))
    if error > max(epsabs, epsrel * abs(value)):
        warnings.warn(f"quadrature error estimate {error:.3g} above the "
                      f"requested accuracy", QuadratureWarning, stacklevel=2)
    return SelbergCheck(value, error, exact)
