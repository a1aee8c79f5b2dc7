"""Exception types raised by the library."""


class ReidtraceError(Exception):
    pass


class DescriptorMismatch(ReidtraceError, ValueError):
    """Operands live in different groups (or the wrong kind of group)."""


class IndexOutOfRange(ReidtraceError, ValueError):
    pass


class NonSquare(ReidtraceError, ValueError):
    pass


class SingularDifference(ReidtraceError, ValueError):
    """``det(g.A - f.A) == 0``: the coincidence set is not a finite set of points."""


class NotACoincidencePoint(ReidtraceError, ValueError):
    pass


class NonIntegerTranslation(ReidtraceError, ArithmeticError):
    """The covering translation at a coincidence point came out non-integral."""


class ParseError(ReidtraceError, ValueError):
    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
