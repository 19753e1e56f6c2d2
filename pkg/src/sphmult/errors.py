"""Exception types shared across the package."""


class SphmultError(Exception):
    """Base class for all package-specific errors."""


class DomainError(SphmultError, ValueError):
    """An argument lies outside the supported domain of an operation."""


class PoleError(DomainError):
    """Evaluation was requested at (or too close to) a pole."""


class ConvergenceError(SphmultError, RuntimeError):
    """A series or quadrature failed to reach the requested tolerance.

    ``best_estimate`` and ``achieved_error`` carry the last state so a
    caller can decide whether the partial result is still usable.
    """

    def __init__(self, message, best_estimate=None, achieved_error=None):
        super().__init__(message)
        self.best_estimate = best_estimate
        self.achieved_error = achieved_error


class NotAMultiplierError(SphmultError, ValueError):
    """The spectral parameter does not index a completely bounded multiplier."""


class InvariantError(SphmultError, ValueError):
    """A structural invariant (e.g. a matrix identity) is violated."""


class CapacityError(SphmultError, OverflowError):
    """An enumeration would exceed the configured size cap."""
