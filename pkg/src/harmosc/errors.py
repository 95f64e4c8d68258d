"""Exception hierarchy.

Two broad families matter for the CLI exit codes: ``ValidationError``
(bad inputs, exit 1) and ``NumericalError`` (computation failed, exit 2).
"""


class HarmoscError(Exception):
    """Base class for all package errors."""


class ValidationError(HarmoscError):
    """Inputs violate a precondition or schema."""


class NumericalError(HarmoscError):
    """A numerically well-posed request could not be computed reliably."""


class DegenerateLeadingCoefficient(ValidationError):
    """Leading polynomial coefficient is (numerically) zero."""


class UnderconstrainedSpec(ValidationError):
    """Design spec leaves coefficients undetermined."""


class OverconstrainedSpec(ValidationError):
    """Design spec supplies more constraints than coefficients."""


class SingularSystem(ValidationError):
    """Assembled design system is rank deficient."""


class ZeroPivot(NumericalError):
    """Diagonal weight of a two-free-coefficient solve vanishes."""


class EventBeyondHorizon(ValidationError):
    """An input event lies past the simulation horizon."""


class ResolutionViolation(ValidationError):
    """Time step too coarse for the fastest system mode."""


class NonFiniteState(NumericalError):
    """Simulation state overflowed."""


class PoleProximity(NumericalError):
    """Transfer function evaluated too close to a pole."""


class TooShort(ValidationError):
    """Signal too short for the requested transform."""


class WindowTooLong(ValidationError):
    """Analysis window exceeds the signal length."""


class WindowTooShort(ValidationError):
    """Analysis window too short for a reliable estimate."""


class NoTransient(HarmoscError):
    """No decaying oscillatory component found above the noise floor."""
