"""
Spin^c Oracles

Four independent decision procedures: the derived-matrix column test, the
α_j' condition on w_2', span membership in img ρ^(2) and the Bockstein test.
"""

from ..cohomology import has_spinc_bockstein, has_spinc_linear, w2_prime_condition
from ..core import BottMatrix, has_spinc_combinatorial
from .interface import ISpincOracle


class CombinatorialOracle(ISpincOracle):
    """Columns of A' are 0 or equal to the columns of A"""

    @property
    def name(self) -> str:
        return "combinatorial"

    def decide(self, matrix: BottMatrix) -> bool:
        return has_spinc_combinatorial(matrix)


class SquareFreeOracle(ISpincOracle):
    """Every α_j' read off w_2' is 0 or α_j"""

    @property
    def name(self) -> str:
        return "theorem"

    def decide(self, matrix: BottMatrix) -> bool:
        return w2_prime_condition(matrix)


class LinearOracle(ISpincOracle):
    """w_2 in span(S1 ∪ S2)"""

    @property
    def name(self) -> str:
        return "linear"

    def decide(self, matrix: BottMatrix) -> bool:
        return has_spinc_linear(matrix)


class BocksteinOracle(ISpincOracle):
    """β^(2)(w_2) = 0"""

    @property
    def name(self) -> str:
        return "bockstein"

    def decide(self, matrix: BottMatrix) -> bool:
        return has_spinc_bockstein(matrix)
