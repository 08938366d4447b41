"""
Combinatorial Criteria

Orientability, Betti numbers, homology structure, the derived matrix A'
and the combinatorial spin^c criteria, all read directly off the bit masks
of a Bott matrix.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DimensionRangeError, MatrixIndexError, NotOrientableError
from .matrix import BottMatrix


def is_orientable(matrix: BottMatrix) -> bool:
    """Every row of A has an even number of ones"""
    return all(mask.bit_count() % 2 == 0 for mask in matrix.rows)


def require_orientable(matrix: BottMatrix) -> None:
    if not is_orientable(matrix):
        odd = [i + 1 for i, mask in enumerate(matrix.rows) if mask.bit_count() % 2]
        raise NotOrientableError(f"Matrix is not orientable: rows {odd} have odd weight")


def betti1(matrix: BottMatrix) -> int:
    """Number of zero columns of A"""
    return sum(1 for column in matrix.columns if column == 0)


def betti2(matrix: BottMatrix) -> int:
    """Number of pairs i < j with A^(i) = A^(j)"""
    counts: dict[int, int] = {}
    for column in matrix.columns:
        counts[column] = counts.get(column, 0) + 1
    return sum(size * (size - 1) // 2 for size in counts.values())


def h1_z_rank(matrix: BottMatrix) -> int:
    """Rank of H^1(Γ,Z), equal to b1"""
    return betti1(matrix)


def equal_column_pairs(matrix: BottMatrix) -> list[tuple[int, int]]:
    """1-based pairs (k, l), k < l, with A^(k) = A^(l), in lexicographic order"""
    columns = matrix.columns
    return [
        (k + 1, m + 1)
        for k in range(matrix.n)
        for m in range(k + 1, matrix.n)
        if columns[k] == columns[m]
    ]


def structure_string(free_rank: int, torsion_rank: int) -> str:
    """Render Z^a + (Z/2)^b, omitting zero-rank factors"""
    parts = []
    if free_rank:
        parts.append(f"Z^{free_rank}")
    if torsion_rank:
        parts.append(f"(Z/2)^{torsion_rank}")
    return " + ".join(parts) if parts else "0"


@dataclass(frozen=True, slots=True)
class HomologyReport:
    """Ranks of H_1(Γ), H^1(Γ,Z) and H^2(Γ,Z) with dim img ρ^(2)"""

    h1_torsion_rank: int
    h1_free_rank: int
    h1z_free_rank: int
    h2_torsion_rank: int
    h2_free_rank: int
    dim_img_rho2: int

    @property
    def h1(self) -> str:
        return structure_string(self.h1_free_rank, self.h1_torsion_rank)

    @property
    def h1z(self) -> str:
        return structure_string(self.h1z_free_rank, 0)

    @property
    def h2z(self) -> str:
        return structure_string(self.h2_free_rank, self.h2_torsion_rank)


def homology_report(matrix: BottMatrix) -> HomologyReport:
    """
    H_1(Γ) = F2^(n-b1) + Z^b1, H^1(Γ,Z) = Z^b1, H^2(Γ,Z) = F2^(n-b1) + Z^b2
    and dim img ρ^(2) = n - b1 + b2.
    """
    b1 = betti1(matrix)
    b2 = betti2(matrix)
    torsion = matrix.n - b1
    return HomologyReport(
        h1_torsion_rank=torsion,
        h1_free_rank=b1,
        h1z_free_rank=h1_z_rank(matrix),
        h2_torsion_rank=torsion,
        h2_free_rank=b2,
        dim_img_rho2=torsion + b2,
    )


def row_dot(matrix: BottMatrix, k: int, m: int) -> int:
    """Scalar product <A_(k), A_(m)> over F2 (1-based rows)"""
    for index in (k, m):
        if not 1 <= index <= matrix.n:
            raise MatrixIndexError(f"Row index {index} outside 1..{matrix.n}")
    return (matrix.rows[k - 1] & matrix.rows[m - 1]).bit_count() & 1


def derived_matrix(matrix: BottMatrix) -> BottMatrix:
    """
    The matrix A' of row scalar products masked by equal columns.

    a'_ij = <A_(i), A_(j)> for i < j with A^(i) != A^(j), zero otherwise.
    The upper triangle is used so that A'^(j) and A^(j) share support.

    Raises:
        NotOrientableError: If A is not orientable
    """
    require_orientable(matrix)
    rows, columns = matrix.rows, matrix.columns
    derived = [0] * matrix.n
    for i in range(matrix.n):
        for j in range(i + 1, matrix.n):
            if columns[i] != columns[j] and (rows[i] & rows[j]).bit_count() & 1:
                derived[i] |= 1 << j
    return BottMatrix(matrix.n, tuple(derived))


def failing_columns(matrix: BottMatrix) -> list[int]:
    """1-based columns j, 3 <= j <= n-2, where A'^(j) is neither 0 nor A^(j)"""
    derived = derived_matrix(matrix)
    return [
        j + 1
        for j in range(2, matrix.n - 2)
        if derived.columns[j] not in (0, matrix.columns[j])
    ]


def has_spinc_combinatorial(matrix: BottMatrix) -> bool:
    """
    Spin^c criterion on columns of the derived matrix.

    M(A) admits a spin^c structure iff A'^(j) = 0 or A'^(j) = A^(j) for every
    3 <= j <= n-2; vacuously true for n <= 4.

    Raises:
        NotOrientableError: If A is not orientable
    """
    return not failing_columns(matrix)


def has_spinc_dim5_corollary(matrix: BottMatrix) -> bool:
    """
    Five-dimensional criterion: A_(3) = 0 or a_12 = 0 or a_23 = 0.

    Raises:
        DimensionRangeError: If n != 5
        NotOrientableError: If A is not orientable
    """
    if matrix.n != 5:
        raise DimensionRangeError(f"The five-dimensional criterion needs n = 5, got {matrix.n}")
    require_orientable(matrix)
    return matrix.row(3) == 0 or matrix.entry(1, 2) == 0 or matrix.entry(2, 3) == 0
