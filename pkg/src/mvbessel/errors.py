"""Exception types shared across the package."""


class MvBesselError(Exception):
    """Base class for all package errors."""


class NotDivisible(MvBesselError):
    """Exact polynomial division left a non-zero remainder."""


class NotSymmetric(MvBesselError):
    """A polynomial expected to be symmetric is not."""


class DegenerateEigenvalue(MvBesselError):
    """Eigenvalue collision: a triangular eigenfunction construction has no
    unique solution at these parameter values."""


class PoleError(MvBesselError):
    """A coefficient function was evaluated at a pole."""


class ConvergenceError(MvBesselError):
    """A moment integral diverges for the given exponents."""


class NotProportional(MvBesselError):
    """An operator output expected to be a scalar multiple of its input is not."""


class DegenerateRecurrence(MvBesselError):
    """A leading recurrence coefficient vanished; the moment table cannot be filled."""
