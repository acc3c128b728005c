"""Exception and warning classes shared across the package."""


class BesselDomainError(ValueError):
    """An argument lies outside the domain where an operation is defined."""


class NonConvergenceError(ArithmeticError):
    """A series or continued fraction failed to reach tolerance within its term cap."""


class QuadratureError(ArithmeticError):
    """The integrand produced a non-finite value away from the integration endpoints."""


class AccuracyWarning(UserWarning):
    """Result is computed but the evaluation regime is known to lose accuracy."""


class OverflowRiskWarning(UserWarning):
    """Integrand magnitude may overflow double precision before it decays."""
