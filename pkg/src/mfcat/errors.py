"""Exception hierarchy shared by all mfcat modules."""


class MFCatError(Exception):
    """Base class for every error raised by mfcat."""


class InputError(MFCatError, ValueError):
    """Malformed or inconsistent input (CLI exit code 2)."""


class MathematicalFailure(MFCatError):
    """A verification failed on well-formed input (CLI exit code 1)."""


class UnknownVariable(InputError):
    pass


class PolySyntaxError(InputError):
    """Text does not conform to the polynomial grammar."""

    def __init__(self, message, position=None):
        if position is not None:
            message = f"{message} (at offset {position})"
        super().__init__(message)
        self.position = position


class NegativeExponent(PolySyntaxError):
    pass


class RingMismatch(InputError):
    pass


class NoSlicingChannel(InputError):
    pass


class SliceInfinite(InputError):
    pass


class InhomogeneousInput(InputError):
    pass


class ShapeMismatch(InputError):
    pass


class PotentialMismatch(InputError):
    pass


class DegreeMismatch(InputError):
    pass


class ParityMismatch(InputError):
    pass


class VariableLeak(InputError):
    pass


class SchemaError(InputError):
    pass


class CurvatureMismatch(MathematicalFailure):
    pass


class HomogeneityViolation(MathematicalFailure):
    pass


class ContractionMismatch(MathematicalFailure):
    pass


class NotClosed(MathematicalFailure):
    pass


class FiltrationTooShallow(MathematicalFailure):
    pass
