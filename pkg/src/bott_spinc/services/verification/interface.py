"""
Verification Service Interface

Defines contract for the oracle consistency harness
"""

from abc import ABC, abstractmethod

from ...models import VerificationReport


class IVerificationService(ABC):
    """Interface for verification services"""

    @abstractmethod
    def verify_oracles(
        self, n_exhaustive_max: int, samples_per_dim: int, seed: int
    ) -> VerificationReport:
        """
        Cross-check the spin^c oracles and the basis and kernel dimensions.

        Args:
            n_exhaustive_max: Every orientable matrix of dimension 4..n_exhaustive_max is checked
            samples_per_dim: Random matrices checked in each larger dimension up to 10
            seed: Seed of the random sampler

        Returns:
            Report carrying the first counterexample, if any

        Raises:
            DimensionRangeError: If n_exhaustive_max > 7
        """
        pass
