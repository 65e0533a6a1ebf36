"""Exception hierarchy.

Every error carries a short machine-readable ``code`` (the class name) so the
command line front end can print a parsable error line and map it to an exit
status.
"""


class OlctError(Exception):
    """Base class for all toolkit errors."""

    exit_code = 2

    @property
    def code(self):
        return type(self).__name__


class ValidationError(OlctError):
    """Input violates a documented invariant."""

    exit_code = 1


class NumericalError(OlctError):
    """A computation produced an unusable number (NaN, Inf, no root)."""

    exit_code = 2


class SymplecticViolation(ValidationError):
    pass


class DegenerateB(ValidationError):
    pass


class GridMismatch(ValidationError):
    pass


class NonPowerOfTwo(ValidationError):
    pass


class ZeroScale(ValidationError):
    pass


class UnsupportedOrder(ValidationError):
    pass


class BadExponent(ValidationError):
    pass


class LambdaOutOfRange(ValidationError):
    pass


class NotNormalized(ValidationError):
    pass


class InsufficientSupport(ValidationError):
    pass


class UnsupportedProbe(ValidationError):
    pass


class ZeroTails(NumericalError):
    pass


class ParseError(ValidationError):
    """Malformed configuration or CSV input."""

    def __init__(self, message, line=None, field=None):
        where = []
        if line is not None:
            where.append(f"line {line}")
        if field is not None:
            where.append(f"field {field!r}")
        if where:
            message = f"{message} ({', '.join(where)})"
        super().__init__(message)
        self.line = line
        self.field = field


class IOFailure(OlctError):
    """File could not be read or written."""

    exit_code = 3
