"""
Cohomology Ring over F2

H*(Γ, F2) = F2[x_1..x_n] / (θ_1..θ_n) with θ_j = x_j^2 + α_j x_j and
α_j = Σ_{i<j} a_ij x_i. Products are brought to square-free normal form by
rewriting x_j^2 -> α_j x_j. Each rewrite lowers the exponent of x_j and only
raises exponents of smaller indices, so any rewriting order terminates.
"""

from __future__ import annotations

from math import comb
from typing import Literal

from ..core import BottMatrix, MatrixIndexError
from .polynomial import F2Poly, Monomial

RewriteStrategy = Literal["highest", "lowest"]


def alpha(matrix: BottMatrix, j: int) -> F2Poly:
    """α_j = Σ_{i<j} a_ij x_i, read off column j"""
    if not 1 <= j <= matrix.n:
        raise MatrixIndexError(f"Column index {j} outside 1..{matrix.n}")
    return F2Poly.from_masks(matrix.n, single_bits(matrix.columns[j - 1]))


def single_bits(mask: int) -> list[int]:
    """Split a mask into its set bits, lowest first"""
    found = []
    while mask:
        low = mask & -mask
        found.append(low)
        mask ^= low
    return found


def normal_form(
    matrix: BottMatrix,
    exponents: tuple[int, ...],
    strategy: RewriteStrategy = "highest",
) -> set[int]:
    """
    Square-free normal form of the monomial x^exponents.

    Args:
        matrix: Bott matrix defining the relations
        exponents: exponent of x_1..x_n
        strategy: rewrite the highest or the lowest squared index first

    Returns:
        Set of monomial masks whose sum is the normal form
    """
    if len(exponents) != matrix.n:
        raise ValueError(f"Expected {matrix.n} exponents, got {len(exponents)}")
    columns = matrix.columns
    result: set[int] = set()
    stack = [list(exponents)]
    while stack:
        term = stack.pop()
        squared = [index for index, power in enumerate(term) if power >= 2]
        if not squared:
            mask = 0
            for index, power in enumerate(term):
                if power:
                    mask |= 1 << index
            result ^= {mask}
            continue

        j = squared[-1] if strategy == "highest" else squared[0]
        column = columns[j]
        # x_j^2 = 0 when A^(j) = 0
        while column:
            low = column & -column
            i = low.bit_length() - 1
            rewritten = list(term)
            rewritten[j] -= 1
            rewritten[i] += 1
            stack.append(rewritten)
            column ^= low
    return result


def multiply_monomials(
    matrix: BottMatrix,
    first: Monomial,
    second: Monomial,
    strategy: RewriteStrategy = "highest",
) -> set[int]:
    """Normal form of the product of two square-free monomials as a set of masks"""
    if not first.mask & second.mask:
        return {first.mask | second.mask}
    exponents = tuple(
        ((first.mask >> index) & 1) + ((second.mask >> index) & 1)
        for index in range(matrix.n)
    )
    return normal_form(matrix, exponents, strategy)


def mul_reduced(
    matrix: BottMatrix,
    p: F2Poly,
    q: F2Poly,
    strategy: RewriteStrategy = "highest",
) -> F2Poly:
    """
    Product p * q in H*(Γ, F2), reduced to square-free normal form.

    Raises:
        ValueError: If p, q or the matrix disagree on the variable count
    """
    if p.n != matrix.n or q.n != matrix.n:
        raise ValueError(
            f"Polynomials over {p.n} and {q.n} variables for a matrix of size {matrix.n}"
        )
    masks: set[int] = set()
    for first in p.terms:
        for second in q.terms:
            masks ^= multiply_monomials(matrix, first, second, strategy)
    return F2Poly(matrix.n, frozenset(Monomial(mask) for mask in masks))


def square(matrix: BottMatrix, j: int) -> F2Poly:
    """x_j^2 in normal form, that is α_j x_j"""
    x_j = F2Poly.variable(matrix.n, j)
    return mul_reduced(matrix, x_j, x_j)


def f2_cohomology_dims(n: int) -> tuple[int, int, int]:
    """Dimensions of H^1, H^2 and H^3 of Γ over F2: the square-free bases B1, B2, B3"""
    if n < 1:
        raise ValueError(f"Variable count must be positive, got {n}")
    return n, comb(n, 2), comb(n, 3)
