"""
Spin^c Oracle Interface

Defines the contract for procedures that decide whether an orientable real
Bott manifold admits a spin^c structure.
"""

from abc import ABC, abstractmethod

from ..core import BottMatrix


class ISpincOracle(ABC):
    """Interface for spin^c deciders"""

    @property
    @abstractmethod
    def name(self) -> str:
        """Short identifier used in configuration and reports"""
        pass

    @abstractmethod
    def decide(self, matrix: BottMatrix) -> bool:
        """
        Decide spin^c existence for M(A).

        Args:
            matrix: Bott matrix of an orientable real Bott manifold

        Returns:
            True if M(A) admits a spin^c structure

        Raises:
            NotOrientableError: If A is not orientable
        """
        pass

    def __repr__(self) -> str:
        return f"{type(self).__name__}(name={self.name!r})"
