"""Exception types shared across the package."""


class OrdFieldError(Exception):
    """Base class for every error raised by ordfield."""


class DivisionByZero(OrdFieldError, ZeroDivisionError):
    pass


class TagMismatch(OrdFieldError, ValueError):
    """Two rational functions carry different orderings."""


class PrecisionExhausted(OrdFieldError, ArithmeticError):
    """No nonzero coefficient was found within the scan horizon.

    The series may still be nonzero (or may be exactly zero without a
    structural zero tag); the library refuses to guess.
    """

    def __init__(self, message, horizon=None):
        super().__init__(message)
        self.horizon = horizon


class DuplicateExponent(OrdFieldError, ValueError):
    pass


class HeuristicInconclusive(OrdFieldError):
    """A finite scan could neither certify a limit nor find a counter-witness."""


class NotSummable(OrdFieldError, ValueError):
    pass


class StabilizationViolated(OrdFieldError, ValueError):
    """A caller-supplied stabilization bound failed its spot check."""


class UnsupportedField(OrdFieldError, ValueError):
    pass


class NotAGap(OrdFieldError, ValueError):
    pass


class StabilizedSequence(OrdFieldError, ValueError):
    pass


class NotNested(OrdFieldError, ValueError):
    pass


class SymbolNotInField(OrdFieldError, ValueError):
    pass


class ExprSyntaxError(OrdFieldError, SyntaxError):
    """Malformed expression text; ``position`` is a 0-based column."""

    def __init__(self, message, text="", position=0):
        super().__init__(f"{message} at column {position}")
        self.text = text
        self.position = position
