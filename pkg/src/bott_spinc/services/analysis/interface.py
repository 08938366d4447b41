"""
Analysis Service Interface

Defines contract for single-matrix analysis implementations
"""

from abc import ABC, abstractmethod

from ...core import BottMatrix
from ...models import AnalysisReport


class IAnalysisService(ABC):
    """Interface for analysis services"""

    @abstractmethod
    def analyze(self, matrix: BottMatrix, all_oracles: bool = False) -> AnalysisReport:
        """
        Compute the invariants of M(A).

        Args:
            matrix: Bott matrix
            all_oracles: Run every spin^c oracle and report each answer

        Returns:
            Report; spin and spin^c are None for non-orientable matrices
        """
        pass

    @abstractmethod
    def analyze_text(self, text: str, all_oracles: bool = False) -> AnalysisReport:
        """
        Parse matrix text and analyze it.

        Raises:
            MatrixParseError: If the text is not a valid Bott matrix
        """
        pass
