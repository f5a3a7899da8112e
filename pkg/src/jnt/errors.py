"""Exception hierarchy shared by all toolkit modules."""


class JntError(Exception):
    """Base class for toolkit errors."""


class BoundsError(JntError, IndexError):
    """A kernel was asked to touch elements outside a view or matrix."""


class DimensionError(JntError, ValueError):
    """Operand shapes are not conformal."""


class ConfigurationError(JntError, ValueError):
    """Invalid block sizes or environment configuration."""


class SingularMatrixError(JntError, ArithmeticError):
    def __init__(self, column, message=None):
        self.column = column
        super().__init__(message or f"matrix is singular to working precision at column {column}")


class RankDeficientError(JntError, ArithmeticError):
    def __init__(self, column):
        self.column = column
        super().__init__(f"R factor is rank deficient at column {column}")


class ZeroDiagonalError(JntError, ArithmeticError):
    def __init__(self, row):
        self.row = row
        super().__init__(f"zero diagonal entry in row {row}")


class BreakdownError(JntError, ArithmeticError):
    """Conjugate gradient found p'Ap <= 0; the operator is not SPD."""

    def __init__(self, iteration, curvature):
        self.iteration = iteration
        self.curvature = curvature
        super().__init__(f"CG breakdown at iteration {iteration}: p'Ap = {curvature!r}")


class MalformedMatrixError(JntError, ValueError):
    """A sparse matrix holds an index outside its declared shape."""


class DomainError(JntError, ValueError):
    """Argument outside the domain of a special function."""


class BracketError(JntError, ValueError):
    """Root finder called on an interval with no sign change."""


class ParseError(JntError, ValueError):
    def __init__(self, token, position, reason):
        self.token = token
        self.position = position
        super().__init__(f"cannot parse {token!r} as a real number at position {position}: {reason}")


class MatrixMarketError(JntError, ValueError):
    """Unsupported or malformed Matrix Market input."""


class VerificationError(JntError):
    """A benchmark variant produced a result that disagrees with its reference."""
