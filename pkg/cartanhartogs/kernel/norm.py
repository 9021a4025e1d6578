"""Generic norms and Cartan-Hartogs points for the ball and the Lie ball."""

from dataclasses import dataclass
from typing import Any, List, Tuple

import numpy as np

from ..base.domains import DomainSpec
from ..base.exactmath import to_rational
from ..base.exceptions import UnsupportedTypeError, MuNotPositiveError


__all__ = ["HartogsPoint", "generic_norm", "norm_arrays", "in_domain",
           "ball_samples", "sample_arrays", "sample_points"]


@dataclass(eq=False)
class HartogsPoint:
    """
    Point (z, Z) of a Cartan-Hartogs domain.

    Attributes
    ----------
    z: np.ndarray
        base coordinate, complex vector of length d
    Z: np.ndarray
        fiber coordinate, complex vector of length m
    """
    z: np.ndarray
    Z: np.ndarray

    def __post_init__(self) -> None:
        self.z = np.asarray(self.z, dtype=np.complex128).ravel()
        self.Z = np.asarray(self.Z, dtype=np.complex128).ravel()


def _check_family(spec: DomainSpec) -> str:
    family = spec.family
    if family is None:
        raise UnsupportedTypeError(spec.name)
    return family


def norm_arrays(family: str, z: np.ndarray, w: np.ndarray) -> np.ndarray:
    """
    Vectorized generic norm N(z_k, w_k) over rows of z and w.

    :param family: 'ball' or 'lie_ball'
    :param z: (num, d) complex array
    :param w: (num, d) complex array
    :return: (num,) complex array
    """
    inner = np.sum(z * np.conj(w), axis=-1)
    if family == "ball":
        return 1.0 - inner
    zz = np.sum(z * z, axis=-1)
    ww = np.sum(w * w, axis=-1)
    return 1.0 - 2.0 * inner + zz * np.conj(ww)


def generic_norm(spec: DomainSpec, z: Any, w: Any) -> complex:
    """
    Generic norm N(z, w) of the ball I_{1,n} or the Lie ball IV_n.

    I_{1,n}: N(z,w) = 1 - <z,w>.
    IV_n: N(z,w) = 1 - 2<z,w> + (z.z) conj(w.w).
    Here <z,w> = sum z_i conj(w_i) and z.z = sum z_i^2.

    :param spec: domain specification
    :param z: complex vector of length d
    :param w: complex vector of length d
    :return: N(z, w)
    :raises UnsupportedTypeError: if spec is neither a ball nor a Lie ball
    :raises ValueError: if the vectors do not have length d
    """
    family = _check_family(spec)
    z = np.asarray(z, dtype=np.complex128).ravel()
    w = np.asarray(w, dtype=np.complex128).ravel()
    if z.shape != (spec.d,) or w.shape != (spec.d,):
        raise ValueError(f"base vectors should have length {spec.d}")
    return complex(norm_arrays(family, z, w))


def _base_mask(family: str, z: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    """Membership of rows of z in the base and their N(z, z)."""
    nzz = norm_arrays(family, z, z).real
    mask = nzz > 0.0
    if family == "lie_ball":
        mask &= np.abs(np.sum(z * z, axis=-1)) < 1.0
    else:
        mask &= np.sum(np.abs(z)**2, axis=-1) < 1.0
    return mask, nzz


def in_domain(spec: DomainSpec, mu: Any, point: HartogsPoint) -> bool:
    """
    Check membership of point in the Cartan-Hartogs domain.

    The base point z has to lie in the ball (|z| < 1) or the Lie ball
    (N(z,z) > 0 and |z.z| < 1), and the fiber point has to satisfy
    |Z|^2 < N(z,z)^mu.

    :param spec: domain specification
    :param mu: positive exponent
    :param point: the point
    :return: whether the point is inside
    :raises UnsupportedTypeError: if spec has no generic norm here
    """
    family = _check_family(spec)
    if point.z.shape != (spec.d,):
        raise ValueError(f"base vector should have length {spec.d}")
    mask, nzz = _base_mask(family, point.z[None, :])
    if not mask[0]:
        return False
    return bool(np.vdot(point.Z, point.Z).real < nzz[0] ** float(mu))


def ball_samples(rng: np.random.Generator, n: int, num: int) -> np.ndarray:
    """
    Draw points uniformly from the open unit ball of C^n by rejection.

    Candidates are drawn from the cube [-1, 1]^{2n} of R^{2n} and kept if
    inside the ball.

    :param rng: random number generator
    :param n: complex dimension
    :param num: number of points
    :return: (num, n) complex array
    """
    chunks, count = [], 0
    while count < num:
        size = max(2 * (num - count), 64)
        cand = rng.uniform(-1.0, 1.0, size=(size, 2 * n))
        cand = cand[np.sum(cand**2, axis=1) < 1.0]
        chunks.append(cand)
        count += cand.shape[0]
    real = np.concatenate(chunks)[:num]
    return real[:, :n] + 1j * real[:, n:]


def sample_arrays(spec: DomainSpec, m: int, mu: Any, num: int,
                  rng: np.random.Generator) -> Tuple[np.ndarray, np.ndarray]:
    """
    Draw random points of the Cartan-Hartogs domain as arrays.

    Base points are uniform in the base domain (rejection from the unit
    ball, which contains the Lie ball). Fiber points are uniform in the
    ball of radius N(z,z)^(mu/2).

    :param spec: domain specification
    :param m: fiber dimension
    :param mu: positive exponent
    :param num: number of points
    :param rng: random number generator
    :return: (num, d) base array and (num, m) fiber array
    :raises MuNotPositiveError: if mu <= 0
    """
    family = _check_family(spec)
    mu = float(to_rational(mu))
    if mu <= 0:
        raise MuNotPositiveError(mu)
    chunks, count = [], 0
    while count < num:
        z = ball_samples(rng, spec.d, num - count)
        z = z[_base_mask(family, z)[0]]
        chunks.append(z)
        count += z.shape[0]
    z = np.concatenate(chunks)[:num]
    radius = norm_arrays(family, z, z).real ** (mu / 2)
    big_z = ball_samples(rng, m, num) * radius[:, None]
    return z, big_z


def sample_points(spec: DomainSpec, m: int, mu: Any, num: int,
                  rng: np.random.Generator) -> List[HartogsPoint]:
    """Same as sample_arrays, but returns a list of HartogsPoint."""
    z, big_z = sample_arrays(spec, m, mu, num, rng)
    return [HartogsPoint(z[i], big_z[i]) for i in range(num)]
