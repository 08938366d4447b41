"""
Spin^c Condition on the Square-free Class

w_2' is w_2^sf with the monomials x_k x_l of equal columns removed. Grouped
as Σ_j α_j' x_j with α_j' in span{x_1..x_{j-1}}, the manifold is spin^c iff
every α_j' is 0 or α_j.
"""

from __future__ import annotations

from ..core import BottMatrix, equal_column_pairs
from .classes import alphas, w2_square_free
from .polynomial import F2Poly, Monomial


def w2_prime(matrix: BottMatrix) -> F2Poly:
    """
    w_2^sf minus the S2 monomials.

    Raises:
        NotOrientableError: If A is not orientable
    """
    square_free = w2_square_free(matrix)
    equal = frozenset(Monomial.of(k, m) for k, m in equal_column_pairs(matrix))
    return F2Poly(matrix.n, square_free.terms - equal)


def alpha_primes(matrix: BottMatrix) -> list[F2Poly]:
    """[α_1', ..., α_n'] read off w_2' by the highest variable of each monomial"""
    masks: list[list[int]] = [[] for _ in range(matrix.n)]
    for term in w2_prime(matrix):
        low, high = term.variables()
        masks[high - 1].append(1 << (low - 1))
    return [F2Poly.from_masks(matrix.n, group) for group in masks]


def w2_prime_condition(matrix: BottMatrix) -> bool:
    """
    Every α_j' is 0 or equal to α_j.

    Raises:
        NotOrientableError: If A is not orientable
    """
    return all(
        not primed or primed == plain
        for primed, plain in zip(alpha_primes(matrix), alphas(matrix))
    )
