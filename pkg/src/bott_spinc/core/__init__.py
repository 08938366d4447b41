"""Bott matrix data model and combinatorial criteria"""

from .criteria import (
    HomologyReport,
    betti1,
    betti2,
    derived_matrix,
    equal_column_pairs,
    failing_columns,
    h1_z_rank,
    has_spinc_combinatorial,
    has_spinc_dim5_corollary,
    homology_report,
    is_orientable,
    require_orientable,
    row_dot,
    structure_string,
)
from .errors import (
    DimensionRangeError,
    MatrixIndexError,
    MatrixParseError,
    NotOrientableError,
    ShapeError,
    TokenError,
    TriangularityError,
)
from .matrix import MAX_DIMENSION, MIN_DIMENSION, BottMatrix, parse, to_text

__all__ = [
    "BottMatrix",
    "parse",
    "to_text",
    "MIN_DIMENSION",
    "MAX_DIMENSION",
    "is_orientable",
    "require_orientable",
    "betti1",
    "betti2",
    "h1_z_rank",
    "equal_column_pairs",
    "homology_report",
    "HomologyReport",
    "structure_string",
    "row_dot",
    "derived_matrix",
    "failing_columns",
    "has_spinc_combinatorial",
    "has_spinc_dim5_corollary",
    "MatrixParseError",
    "ShapeError",
    "TokenError",
    "TriangularityError",
    "MatrixIndexError",
    "NotOrientableError",
    "DimensionRangeError",
]
