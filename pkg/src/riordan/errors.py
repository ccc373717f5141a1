"""Exception hierarchy shared by every module of the package."""


class RiordanError(Exception):
    """Base class for all errors raised by this package."""


class SeriesError(RiordanError, ValueError):
    pass


class OutOfRangeError(SeriesError, IndexError):
    pass


class NonUnitError(SeriesError):
    """Division by a series whose constant term vanishes."""


class CompositionDomainError(SeriesError):
    pass


class ReversionDomainError(SeriesError):
    pass


class LogDomainError(SeriesError):
    pass


class ExpDomainError(SeriesError):
    pass


class PowDomainError(SeriesError):
    pass


class InsufficientOrderError(RiordanError, ValueError):
    """A series was truncated too early for the requested matrix size."""


class NormalizationError(RiordanError, ValueError):
    pass


class ShapeError(RiordanError, ValueError):
    pass


class SingularMatrixError(RiordanError, ArithmeticError):
    """Exact elimination found no pivot.

    ``row`` is the 0-based index of the pivot row that failed.
    """

    def __init__(self, message, row=None):
        super().__init__(message)
        self.row = row


class HessenbergError(RiordanError, ValueError):
    """Hypotheses of the Hessenberg inversion theorem are violated."""


class ParseError(RiordanError, ValueError):
    """Lexical or syntactic error in a generating-function expression."""

    def __init__(self, message, position):
        super().__init__(f"{message} at offset {position}")
        self.position = position


class LexError(ParseError):
    pass


class GrammarError(ParseError):
    pass


class EvaluationError(RiordanError, ValueError):
    """Expansion of a parsed expression failed at a given subexpression."""

    def __init__(self, message, position):
        super().__init__(f"{message} (subexpression at offset {position})")
        self.position = position


class BFileError(RiordanError, ValueError):
    def __init__(self, message, line):
        super().__init__(f"line {line}: {message}")
        self.line = line
