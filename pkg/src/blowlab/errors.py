"""Exception types shared across the package."""
from __future__ import annotations


class BlowlabError(Exception):
    """Base class for all package-specific errors."""


class ConfigError(BlowlabError, ValueError):
    """Invalid configuration document or constructor arguments.

    Carries the full list of violations so callers can report every
    problem at once instead of just the first.
    """

    def __init__(self, violations):
        if isinstance(violations, str):
            violations = [violations]
        self.violations = list(violations)
        super().__init__("; ".join(self.violations))


class ResolutionError(BlowlabError, ValueError):
    """Grid too coarse to resolve a requested geometric feature."""


class ConvergenceError(BlowlabError, RuntimeError):
    """Iterative solver failed to reach tolerance within its iteration cap."""

    def __init__(self, message, residual=None, iterations=None):
        super().__init__(message)
        self.residual = residual
        self.iterations = iterations


class SolverError(BlowlabError, RuntimeError):
    """Direct linear solve failed (singular or badly conditioned system)."""


class StiffnessError(BlowlabError, RuntimeError):
    """Adaptive step size underflowed; integration cannot continue."""

    def __init__(self, message, t=None, dt=None, max_u=None, max_v=None):
        super().__init__(message)
        self.t = t
        self.dt = dt
        self.max_u = max_u
        self.max_v = max_v


class WrongRegimeError(BlowlabError, ValueError):
    """A verifier was invoked outside the exponent regime it applies to."""


class FitError(BlowlabError, RuntimeError):
    """Rate fit could not be performed on the given trajectory."""
