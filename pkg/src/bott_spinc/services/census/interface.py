"""
Census Service Interface

Defines contract for exhaustive census implementations
"""

from abc import ABC, abstractmethod
from typing import Optional, Sequence

from ...census import CrossCheckMismatch
from ...models import CensusRow


class ICensusService(ABC):
    """Interface for census services"""

    @abstractmethod
    def census(self, n: int, workers: Optional[int] = None) -> CensusRow:
        """
        Count orientable, spin^c and spin matrices of dimension n.

        Args:
            n: Dimension, 4..10
            workers: Worker processes; the counts do not depend on it

        Returns:
            Census row with wall-clock time
        """
        pass

    @abstractmethod
    def census_range(
        self,
        dimensions: Sequence[int],
        workers: Optional[int] = None,
        allow_long: bool = False,
    ) -> list[CensusRow]:
        """
        Run the census for each dimension in ascending order.

        Raises:
            LongRunRefusedError: If a long-running dimension is requested without allow_long
            DimensionRangeError: If a dimension is outside the supported range
        """
        pass

    @abstractmethod
    def cross_check(self, n: int, stride: Optional[int] = None) -> Optional[CrossCheckMismatch]:
        """Compare the census kernel with the cohomology oracles on a subsample"""
        pass
