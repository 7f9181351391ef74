"""Exception hierarchy shared by all modules.

Three tiers matter for the CLI exit-code contract: parse problems (exit 1),
precondition violations (exit 3), and everything that produced an Unknown
verdict (exit 2, not an exception).
"""


class IntervalAlgebraError(Exception):
    """Base class for all library errors."""


class ParseError(IntervalAlgebraError):
    """Malformed textual input; carries line/column when known."""

    def __init__(self, message, line=None, column=None):
        loc = ""
        if line is not None:
            loc = f" (line {line}" + (f", column {column}" if column is not None else "") + ")"
        super().__init__(message + loc)
        self.line = line
        self.column = column


class PreconditionError(IntervalAlgebraError):
    """An operation was called outside its stated contract."""


class DivisionByIntervalContainingZero(PreconditionError):
    pass


class EmptyInput(PreconditionError):
    pass


class DimensionMismatch(PreconditionError):
    pass


class NotSquare(PreconditionError):
    pass


class ShapeError(PreconditionError):
    pass


class SizeGuardExceeded(PreconditionError):
    pass


class SingularIntervalMatrix(PreconditionError):
    pass


class SingularMatrix(PreconditionError):
    """A point (real) matrix turned out singular where regularity was required."""


class PivotContainsZero(PreconditionError):
    pass


class PreconditionNotVerifiable(PreconditionError):
    pass


class NoInitialEnclosure(PreconditionError):
    pass


class UnboundedSolutionSet(PreconditionError):
    pass


class NotSymmetric(PreconditionError):
    pass


class NotBidiagonal(PreconditionError):
    pass


class DiagonalContainsZero(PreconditionError):
    pass


class NotNonnegative(PreconditionError):
    pass


class NotIrreducible(PreconditionError):
    pass


class NotPositiveVector(PreconditionError):
    pass


class ZeroVector(PreconditionError):
    pass


class MalformedProgram(PreconditionError):
    pass


class PreconditionViolated(PreconditionError):
    pass


class SingularEndpointMatrix(PreconditionError):
    pass


class SpectralRadiusNotProven(PreconditionError):
    pass


class UnsupportedMatrixClass(PreconditionError):
    pass


class UnsupportedClass(PreconditionError):
    pass


class NoConvergence(IntervalAlgebraError):
    pass
