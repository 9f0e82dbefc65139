"""Exception hierarchy shared by every module.

Each class carries a stable ``code`` string; the CLI puts that code into
machine-readable error reports.
"""


class SemimodError(Exception):
    code = "Error"


class MismatchedFieldError(SemimodError):
    """Operands belong to different coefficient fields."""

    code = "MismatchedField"


class DivisionByZeroError(SemimodError):
    code = "DivisionByZero"


class InfiniteFieldError(SemimodError):
    """Enumeration was requested for a field with infinitely many elements."""

    code = "InfiniteField"


class MismatchedRingError(SemimodError):
    """Operands belong to different polynomial rings."""

    code = "MismatchedRing"


class DimensionMismatchError(SemimodError):
    code = "DimensionMismatch"


class ZeroCovectorError(SemimodError):
    code = "ZeroCovector"


class ResourceLimitExceededError(SemimodError):
    """A basis computation crossed its pair or degree cap.

    This signals that the instance is beyond desk scale; it is never a
    wrong answer.
    """

    code = "ResourceLimitExceeded"


class EnumerationCapExceededError(SemimodError):
    code = "EnumerationCapExceeded"


class ProblemSyntaxError(SemimodError):
    """Problem text failed to parse; carries the 1-based position."""

    code = "SyntaxError"

    def __init__(self, message, line, column):
        super().__init__(f"{message} (line {line}, column {column})")
        self.line = line
        self.column = column


class UndefinedNameError(SemimodError):
    code = "UndefinedName"
