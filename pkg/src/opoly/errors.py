"""Exception hierarchy shared by all modules."""


class OpolyError(Exception):
    """Base class for library errors."""


class InvalidMeasureError(OpolyError, ValueError):
    """Family parameters or perturbation data out of range."""


class DomainError(OpolyError, ValueError):
    """Point or option not admissible for the requested operation."""


class LengthError(OpolyError, IndexError):
    """Degree exceeds the prepared recurrence coefficients."""


class RatioBreakdownError(OpolyError, ArithmeticError):
    """p_n(a) vanished numerically, so a is effectively inside the support."""


class NumericalBreakdownError(OpolyError, ArithmeticError):
    """A quantity that must be positive came out nonpositive."""


class BracketFailureError(OpolyError, RuntimeError):
    """No sign change could be located for a zero."""

    def __init__(self, message, index=None, mass=None):
        super().__init__(message)
        self.index = index
        self.mass = mass


class StructureRelationError(OpolyError, RuntimeError):
    """Structure relation coefficients fail their consistency identity."""


class PoleError(OpolyError, ZeroDivisionError):
    """Rational coefficient evaluated at a pole."""


class SingularConfigurationError(OpolyError, ZeroDivisionError):
    """A zero sits where the electrostatic field is singular."""
