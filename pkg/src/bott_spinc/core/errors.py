"""
Bott Matrix Errors

Exceptions raised while building matrices or when a criterion's
precondition does not hold.
"""

from typing import Optional


class MatrixParseError(ValueError):
    """Matrix text could not be parsed"""

    def __init__(self, message: str, line: Optional[int] = None, column: Optional[int] = None):
        self.line = line
        self.column = column
        location = ""
        if line is not None:
            location = f"line {line}" + (f", column {column}" if column is not None else "")
            location += ": "
        super().__init__(f"{location}{message}")


class ShapeError(MatrixParseError):
    """Matrix is not square or has an unsupported size"""
    pass


class TriangularityError(MatrixParseError):
    """Nonzero entry on or below the diagonal"""
    pass


class TokenError(MatrixParseError):
    """Entry outside {0, 1}"""
    pass


class MatrixIndexError(IndexError):
    """Row or column index outside 1..n"""
    pass


class NotOrientableError(ValueError):
    """Criterion requires an orientable real Bott manifold"""
    pass


class DimensionRangeError(ValueError):
    """Dimension outside the range supported by an operation"""
    pass
