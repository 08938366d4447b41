"""
Bockstein Homomorphism β^(2): H^2(Γ, F2) -> H^3(Γ, F2)

On basis monomials β^(2)(x_i x_j) = x_i^2 x_j + x_i x_j^2 = (α_i + α_j) x_i x_j,
extended linearly over B2. The kernel equals img ρ^(2), so M(A) is spin^c
iff β^(2)(w_2) = 0.
"""

from __future__ import annotations

from ..core import BottMatrix, DimensionRangeError, MatrixIndexError, require_orientable
from ..linalg import F2Vector, b2_pairs, b2_size, b3_size, rank
from ..linalg.coordinates import MAX_COHOMOLOGY_DIMENSION
from .classes import w2_reduced
from .polynomial import F2Poly
from .ring import RewriteStrategy, alpha, mul_reduced


def beta2_image(
    matrix: BottMatrix, i: int, j: int, strategy: RewriteStrategy = "highest"
) -> F2Poly:
    """
    β^(2)(x_i x_j) in normal form.

    Raises:
        MatrixIndexError: Unless 1 <= i < j <= n
    """
    if not 1 <= i < j <= matrix.n:
        raise MatrixIndexError(f"Expected 1 <= i < j <= {matrix.n}, got ({i}, {j})")
    factor = alpha(matrix, i) + alpha(matrix, j)
    if not factor:
        return F2Poly.zero(matrix.n)
    return mul_reduced(matrix, factor, F2Poly.monomial(matrix.n, i, j), strategy)


def beta2(matrix: BottMatrix, poly: F2Poly) -> F2Poly:
    """
    Linear extension of β^(2) to a degree two class in normal form.

    Raises:
        ValueError: If poly is not homogeneous of degree 2
    """
    if not poly.is_homogeneous(2):
        raise ValueError(f"β^(2) is defined on degree two classes, got {poly}")
    image = F2Poly.zero(matrix.n)
    for term in poly:
        i, j = term.variables()
        image = image + beta2_image(matrix, i, j)
    return image


def beta2_columns(matrix: BottMatrix) -> list[F2Vector]:
    """B3 coordinates of β^(2)(x_i x_j) for every x_i x_j in B2, in B2 order"""
    n = matrix.n
    if n > MAX_COHOMOLOGY_DIMENSION:
        raise DimensionRangeError(
            f"Degree three coordinates are supported up to n = {MAX_COHOMOLOGY_DIMENSION}, got {n}"
        )
    zero = F2Vector.zero(b3_size(n))
    columns = []
    for i, j in b2_pairs(n):
        image = beta2_image(matrix, i, j)
        columns.append(image.to_b3_vector() if image else zero)
    return columns


def beta2_kernel_dim(matrix: BottMatrix) -> int:
    """C(n, 2) - rank of β^(2) from B2 to B3"""
    return b2_size(matrix.n) - rank(beta2_columns(matrix))


def has_spinc_bockstein(matrix: BottMatrix) -> bool:
    """
    Spin^c iff β^(2)(w_2) = 0.

    Raises:
        NotOrientableError: If A is not orientable
    """
    require_orientable(matrix)
    return beta2(matrix, w2_reduced(matrix)).is_zero()
