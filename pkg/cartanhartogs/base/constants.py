"""Constants used through the code."""

from fractions import Fraction


__all__ = ["DEFAULT_TOL", "DEFAULT_SEED", "MP_DPS", "NEWTON_GRID",
           "M_OMEGA_WINDOW", "M_OMEGA_CAP", "ROOT_TOL", "ROOT_MAX_STEPS",
           "ROOT_EXTRA_PREC", "AMBIGUITY_FACTOR", "MC_SAMPLES", "MC_BATCH",
           "QUAD_LIMIT", "QUAD_EPSABS", "QUAD_EPSREL", "KERNEL_PAIRS",
           "SIGN_GRID"]

DEFAULT_TOL = Fraction(1, 10**9)  # Width of refined root brackets
DEFAULT_SEED = 1337  # Seed for random sampling
MP_DPS = 30  # Decimal digits for mpmath evaluations
NEWTON_GRID = 1024  # Newton iterates are snapped to (hi-lo)/NEWTON_GRID

# m_omega search
M_OMEGA_WINDOW = 8
M_OMEGA_CAP = 64

# Numeric oracle
ROOT_TOL = 1.0e-12  # Relative residual accepted for numeric roots
ROOT_MAX_STEPS = 400
ROOT_EXTRA_PREC = 40
AMBIGUITY_FACTOR = 10  # Roots within AMBIGUITY_FACTOR*tol of Re = 1/2
MC_SAMPLES = 10**6
MC_BATCH = 200000
QUAD_LIMIT = 200
QUAD_EPSABS = 1.0e-13
QUAD_EPSREL = 1.0e-11

# Bergman kernel sampling
KERNEL_PAIRS = 10**4
SIGN_GRID = 400
