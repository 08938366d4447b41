"""Exhaustive enumeration of orientable Bott matrices and the census kernel"""

from .enumeration import (
    CENSUS_MAX_DIMENSION,
    CENSUS_MIN_DIMENSION,
    PUBLISHED_COUNTS,
    CrossCheckMismatch,
    check_dimension,
    chunk_heads,
    classify_fast,
    count_chunks,
    cross_check,
    enumerate_orientable,
    iter_orientable,
    matrix_at,
    orientable_count,
    partition_chunks,
    random_bott_matrix,
    random_orientable,
)

__all__ = [
    "CENSUS_MIN_DIMENSION",
    "CENSUS_MAX_DIMENSION",
    "PUBLISHED_COUNTS",
    "CrossCheckMismatch",
    "check_dimension",
    "chunk_heads",
    "partition_chunks",
    "count_chunks",
    "orientable_count",
    "matrix_at",
    "iter_orientable",
    "enumerate_orientable",
    "random_orientable",
    "random_bott_matrix",
    "classify_fast",
    "cross_check",
]
