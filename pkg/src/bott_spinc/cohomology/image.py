"""
Image of the Coefficient Reduction

img ρ^(2) inside H^2(Γ, F2) has the basis S1 ∪ S2 with
S1 = {α_j x_j : A^(j) != 0} and S2 = {x_k x_l : k < l, A^(k) = A^(l)}.
M(A) admits a spin^c structure iff w_2 lies in this span.
"""

from __future__ import annotations

from ..core import BottMatrix, equal_column_pairs, require_orientable
from ..linalg import EchelonBasis, F2Vector, b2_size
from .classes import square_classes, w2_reduced, w2_square_free
from .polynomial import F2Poly


def s1_basis(matrix: BottMatrix) -> list[F2Poly]:
    """α_j x_j for every nonzero column j, already square-free since α_j uses x_i, i < j"""
    basis = []
    for j, column in enumerate(matrix.columns):
        if not column:
            continue
        bit_j = 1 << j
        masks = []
        bits = column
        while bits:
            low = bits & -bits
            masks.append(low | bit_j)
            bits ^= low
        basis.append(F2Poly.from_masks(matrix.n, masks))
    return basis


def s2_basis(matrix: BottMatrix) -> list[F2Poly]:
    """x_k x_l for every pair of equal columns"""
    return [F2Poly.monomial(matrix.n, k, m) for k, m in equal_column_pairs(matrix)]


def coordinate_vectors(polys: list[F2Poly], n: int) -> list[F2Vector]:
    return [poly.to_b2_vector() if poly else F2Vector.zero(b2_size(n)) for poly in polys]


def img_rho2_basis(matrix: BottMatrix) -> EchelonBasis:
    """Echelon basis of span(S1 ∪ S2) in B2 coordinates"""
    vectors = coordinate_vectors(s1_basis(matrix) + s2_basis(matrix), matrix.n)
    return EchelonBasis(b2_size(matrix.n), vectors)


def img_rho2_rank(matrix: BottMatrix) -> int:
    return img_rho2_basis(matrix).rank


def _contains(basis: EchelonBasis, poly: F2Poly) -> bool:
    if not poly:
        return True
    return basis.contains(poly.to_b2_vector())


def has_spinc_linear(matrix: BottMatrix) -> bool:
    """
    Spin^c iff the B2 coordinates of w_2 lie in span(S1 ∪ S2).

    Raises:
        NotOrientableError: If A is not orientable
    """
    require_orientable(matrix)
    return _contains(img_rho2_basis(matrix), w2_reduced(matrix))


def w2_in_square_span(matrix: BottMatrix) -> bool:
    """
    Whether w_2 is a sum of squares x_j^2, the image of x -> x^2 on H^1.

    A sufficient condition for spin^c; every spin manifold satisfies it.
    """
    n = matrix.n
    squares = [poly for poly in square_classes(matrix) if poly]
    basis = EchelonBasis(b2_size(n), coordinate_vectors(squares, n))
    return _contains(basis, w2_reduced(matrix))


def square_reduction_in_s1(matrix: BottMatrix) -> bool:
    """
    w2_reduced - w2_square_free lies in span(S1).

    Raises:
        NotOrientableError: If A is not orientable
    """
    difference = w2_reduced(matrix) - w2_square_free(matrix)
    basis = EchelonBasis(b2_size(matrix.n), coordinate_vectors(s1_basis(matrix), matrix.n))
    return _contains(basis, difference)

