"""
Stiefel-Whitney Classes

The total class w(M) = Π_j (1 + α_j) expanded in H*(Γ, F2), its low
degree components and the square-free part of w_2.
"""

from __future__ import annotations

from ..core import BottMatrix, require_orientable
from .polynomial import F2Poly, Monomial
from .ring import RewriteStrategy, alpha, mul_reduced, square


def alphas(matrix: BottMatrix) -> list[F2Poly]:
    """[α_1, ..., α_n]"""
    return [alpha(matrix, j) for j in range(1, matrix.n + 1)]


def w1(matrix: BottMatrix) -> F2Poly:
    """Σ_j α_j; the coefficient of x_i is the parity of row i"""
    return F2Poly.from_masks(
        matrix.n,
        (1 << i for i, mask in enumerate(matrix.rows) if mask.bit_count() & 1),
    )


def w2_reduced(matrix: BottMatrix, strategy: RewriteStrategy = "highest") -> F2Poly:
    """Σ_{i<j} α_i α_j reduced into the basis B2"""
    values = alphas(matrix)
    total = F2Poly.zero(matrix.n)
    for j in range(matrix.n):
        if not values[j]:
            continue
        for i in range(j):
            if values[i]:
                total = total + mul_reduced(matrix, values[i], values[j], strategy)
    return total


def total_sw_classes(matrix: BottMatrix, max_degree: int = 3) -> list[F2Poly]:
    """
    Components [w_0, ..., w_max_degree] of Π_j (1 + α_j).

    Expanded with the elementary symmetric recurrence e_k += e_{k-1} α_j,
    every partial product kept in normal form.
    """
    if max_degree < 0:
        raise ValueError(f"max_degree must be non-negative, got {max_degree}")
    classes = [F2Poly.one(matrix.n)] + [F2Poly.zero(matrix.n)] * max_degree
    for value in alphas(matrix):
        if not value:
            continue
        for k in range(max_degree, 0, -1):
            if classes[k - 1]:
                classes[k] = classes[k] + mul_reduced(matrix, classes[k - 1], value)
    return classes


def w3_reduced(matrix: BottMatrix) -> F2Poly:
    return total_sw_classes(matrix, 3)[3]


def w2_square_free(matrix: BottMatrix) -> F2Poly:
    """
    Square-free part of the degree two component of Π_j (1 + α_j).

    For orientable A this is Σ_{k<l} <A_(k), A_(l)> x_k x_l.

    Raises:
        NotOrientableError: If A is not orientable
    """
    require_orientable(matrix)
    rows = matrix.rows
    masks = [
        (1 << k) | (1 << m)
        for k in range(matrix.n)
        for m in range(k + 1, matrix.n)
        if (rows[k] & rows[m]).bit_count() & 1
    ]
    return F2Poly(matrix.n, frozenset(Monomial(mask) for mask in masks))


def has_spin(matrix: BottMatrix) -> bool:
    """
    Spin structure exists iff w_2 = 0.

    Raises:
        NotOrientableError: If A is not orientable
    """
    require_orientable(matrix)
    return w2_reduced(matrix).is_zero()


def square_classes(matrix: BottMatrix) -> list[F2Poly]:
    """[x_1^2, ..., x_n^2] in normal form; x_j^2 = 0 iff A^(j) = 0"""
    return [square(matrix, j) for j in range(1, matrix.n + 1)]
