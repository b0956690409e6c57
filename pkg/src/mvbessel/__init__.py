"""Exact rational arithmetic for multivariable Bessel polynomials.

Construction of the Jack-triangular Bessel eigenfunctions, their commuting
tower of eigenoperators, Pieri recurrences, norms, moment-integral
orthogonality oracles, and BC-type Jacobi cross-checks.
"""

from .errors import (
    ConvergenceError,
    DegenerateEigenvalue,
    DegenerateRecurrence,
    MvBesselError,
    NotDivisible,
    NotProportional,
    NotSymmetric,
    PoleError,
)
from .partitions import Partition

__all__ = [
    "ConvergenceError",
    "DegenerateEigenvalue",
    "DegenerateRecurrence",
    "MvBesselError",
    "NotDivisible",
    "NotProportional",
    "NotSymmetric",
    "Partition",
    "PoleError",
]

__version__ = "0.1.0"
