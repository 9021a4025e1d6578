"""Bergman kernel of Cartan-Hartogs domains over the ball and the Lie ball."""

import math
from typing import Any, NamedTuple, Optional, Tuple

import numpy as np
from scipy.optimize import brentq

from ..base.constants import DEFAULT_SEED, KERNEL_PAIRS, MC_BATCH, SIGN_GRID
from ..base.domains import DomainSpec
from ..base.exactmath import to_rational
from ..base.exceptions import (PointOutsideDomainError, BranchCutError,
                               MuNotPositiveError, UnsupportedTypeError)
from ..hua.decomp import representative_polynomial
from .norm import (HartogsPoint, generic_norm, norm_arrays, in_domain,
                   sample_arrays)


__all__ = ["xi_eta", "bergman_kernel", "RangeLemmaReport",
           "range_lemma_check", "SignChange", "kernel_sign_change"]


def _check_point(spec: DomainSpec, mu: Any, point: HartogsPoint, m: int):
    if point.Z.shape != (m,):
        raise PointOutsideDomainError(f"fiber vector of length "
                                      f"{point.Z.shape[0]}, expected {m}")
    if not in_domain(spec, mu, point):
        raise PointOutsideDomainError(f"z = {point.z}, Z = {point.Z}")


def xi_eta(spec: DomainSpec, mu: Any, p: HartogsPoint,
           q: HartogsPoint) -> Tuple[complex, complex]:
    """
    Get xi = <Z,W> / N(z,w)^mu and eta = 1 / (1 - xi).

    :param spec: domain specification, a ball or a Lie ball
    :param mu: positive exponent
    :param p: point (z, Z)
    :param q: point (w, W)
    :return: (xi, eta)
    :raises MuNotPositiveError: if mu <= 0
    :raises PointOutsideDomainError: if a point is outside the domain
    :raises BranchCutError: if Re N(z,w) <= 0
    """
    mu = to_rational(mu)
    if mu <= 0:
        raise MuNotPositiveError(mu)
    m = p.Z.shape[0]
    _check_point(spec, mu, p, m)
    _check_point(spec, mu, q, m)
    norm = generic_norm(spec, p.z, q.z)
    if norm.real <= 0:
        raise BranchCutError(norm)
    xi = np.vdot(q.Z, p.Z) / norm ** float(mu)
    return complex(xi), complex(1.0 / (1.0 - xi))


def bergman_kernel(spec: DomainSpec, m: int, mu: Any, p: HartogsPoint,
                   q: HartogsPoint) -> complex:
    """
    Bergman kernel of the Cartan-Hartogs domain, up to a positive constant.

    K = N(z,w)^(-g-m mu) eta^(m+1) P_mu^m(eta), with principal powers.

    :param spec: domain specification, a ball or a Lie ball
    :param m: fiber dimension, the length of Z and W
    :param mu: positive rational exponent
    :param p: point (z, Z)
    :param q: point (w, W)
    :return: the kernel value
    :raises PointOutsideDomainError: if a point is outside the domain
    :raises UnsupportedTypeError: if spec has no generic norm here
    """
    mu = to_rational(mu)
    if p.Z.shape != (m,):
        raise PointOutsideDomainError(f"fiber vector of length "
                                      f"{p.Z.shape[0]}, expected {m}")
    xi, eta = xi_eta(spec, mu, p, q)
    norm = generic_norm(spec, p.z, q.z)
    poly = representative_polynomial(spec, m).at_mu(mu)
    return complex(norm ** (-spec.g - m * float(mu)) * eta ** (m + 1)
                   * poly(eta))


class RangeLemmaReport(NamedTuple):
    """
    Outcome of sampling xi and eta over random point pairs.

    Attributes
    ----------
    num_pairs: int
        number of sampled pairs
    max_abs_xi: float
        largest |xi|
    min_re_eta: float
        smallest Re eta
    violations: int
        pairs with |xi| >= 1 or Re eta <= 1/2
    """
    num_pairs: int
    max_abs_xi: float
    min_re_eta: float
    violations: int


def range_lemma_check(spec: DomainSpec, m: int, mu: Any,
                      num_pairs: int = KERNEL_PAIRS,
                      seed: int = DEFAULT_SEED,
                      batch: int = MC_BATCH) -> RangeLemmaReport:
    """
    Check |xi| < 1 and Re eta > 1/2 on random pairs of domain points.

    :param spec: domain specification, a ball or a Lie ball
    :param m: fiber dimension
    :param mu: positive exponent
    :param num_pairs: number of pairs
    :param seed: seed of the random stream
    :param batch: number of pairs sampled at once
    :return: the report
    :raises BranchCutError: if Re N(z,w) <= 0 for some pair
    """
    rng = np.random.default_rng(seed)
    family = spec.family
    mu_float = float(to_rational(mu))
    max_xi, min_eta, violations = 0.0, math.inf, 0
    remaining = num_pairs
    while remaining > 0:
        num = min(batch, remaining)
        z, big_z = sample_arrays(spec, m, mu, num, rng)
        w, big_w = sample_arrays(spec, m, mu, num, rng)
        norm = norm_arrays(family, z, w)
        if np.any(norm.real <= 0):
            raise BranchCutError(norm[np.argmin(norm.real)])
        xi = np.sum(big_z * np.conj(big_w), axis=1) / norm ** mu_float
        eta = 1.0 / (1.0 - xi)
        max_xi = max(max_xi, float(np.max(np.abs(xi))))
        min_eta = min(min_eta, float(np.min(eta.real)))
        violations += int(np.sum((np.abs(xi) >= 1.0) | (eta.real <= 0.5)))
        remaining -= num
    return RangeLemmaReport(num_pairs, max_xi, min_eta, violations)


class SignChange(NamedTuple):
    """
    Zero of the kernel along xi = -t between (0, Z) and (0, -Z).

    Attributes
    ----------
    t: float
        |Z|^2 at the zero
    eta: float
        1 / (1 + t), a real root of P_mu^m in (1/2, 1)
    p: HartogsPoint
        (0, sqrt(t) e_1)
    q: HartogsPoint
        (0, -sqrt(t) e_1)
    """
    t: float
    eta: float
    p: HartogsPoint
    q: HartogsPoint


def kernel_sign_change(spec: DomainSpec, m: int, mu: Any,
                       grid: int = SIGN_GRID) -> Optional[SignChange]:
    """
    Find a zero of the kernel between the points (0, Z) and (0, -Z).

    Along these pairs xi = -|Z|^2 = -t and the kernel has the sign of
    f(t) = P_mu^m(1/(1+t)). A sign change of f on a grid of (0, 1) is
    refined with brentq. The grid includes t = 1, where f equals q_m(mu),
    so zeros next to eta = 1/2 are bracketed too.

    :param spec: domain specification, a ball or a Lie ball
    :param m: fiber dimension
    :param mu: positive exponent
    :param grid: number of grid intervals
    :return: the zero, None if f keeps its sign on the grid
    :raises UnsupportedTypeError: if spec has no generic norm here
    """
    if spec.family is None:
        raise UnsupportedTypeError(spec.name)
    poly = representative_polynomial(spec, m).at_mu(to_rational(mu))

    def _f(t: float) -> float:
        return poly(1.0 / (1.0 + t))

    ts = np.linspace(0.0, 1.0, grid + 1)[1:]
    values = [_f(float(t)) for t in ts]
    for i in range(len(ts) - 1):
        if values[i] == 0.0 or values[i] * values[i+1] < 0:
            lo, hi = float(ts[i]), float(ts[i+1])
            t = lo if values[i] == 0.0 else brentq(_f, lo, hi, xtol=1.0e-14)
            z = np.zeros(spec.d)
            big_z = np.zeros(m, dtype=np.complex128)
            big_z[0] = math.sqrt(t)
            return SignChange(t, 1.0 / (1.0 + t), HartogsPoint(z, big_z),
                              HartogsPoint(z, -big_z))
    return None
