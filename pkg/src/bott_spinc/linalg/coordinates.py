"""
Monomial Coordinates

Bijections between square-free monomials of degree 2 and 3 in x_1..x_n and
coordinates of F2 vectors. B2 is ordered by (i, j) ascending and B3 by
(i, j, k) ascending, both lexicographic with 1-based variable indices.
"""

from functools import lru_cache
from itertools import combinations
from math import comb

MAX_COHOMOLOGY_DIMENSION = 24


def b2_size(n: int) -> int:
    return comb(n, 2)


def b3_size(n: int) -> int:
    return comb(n, 3)


def rank2(n: int, i: int, j: int) -> int:
    """0-based coordinate of x_i x_j (1 <= i < j <= n) in B2"""
    if not 1 <= i < j <= n:
        raise IndexError(f"Expected 1 <= i < j <= {n}, got ({i}, {j})")
    return (i - 1) * (2 * n - i) // 2 + (j - i) - 1


@lru_cache(maxsize=None)
def b2_pairs(n: int) -> tuple[tuple[int, int], ...]:
    return tuple(combinations(range(1, n + 1), 2))


@lru_cache(maxsize=None)
def b3_triples(n: int) -> tuple[tuple[int, int, int], ...]:
    return tuple(combinations(range(1, n + 1), 3))


@lru_cache(maxsize=None)
def _b3_index(n: int) -> dict[tuple[int, int, int], int]:
    return {triple: index for index, triple in enumerate(b3_triples(n))}


def rank3(n: int, i: int, j: int, k: int) -> int:
    """0-based coordinate of x_i x_j x_k (1 <= i < j < k <= n) in B3"""
    if not 1 <= i < j < k <= n:
        raise IndexError(f"Expected 1 <= i < j < k <= {n}, got ({i}, {j}, {k})")
    if n > MAX_COHOMOLOGY_DIMENSION:
        raise ValueError(
            f"Degree-3 coordinates are supported up to n = {MAX_COHOMOLOGY_DIMENSION}"
        )
    return _b3_index(n)[(i, j, k)]
