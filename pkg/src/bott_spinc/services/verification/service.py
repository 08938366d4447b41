"""
Verification Service Implementation

Runs every consistency check on each orientable matrix up to a dimension
and on seeded random samples above it, stopping at the first failure.
"""

from typing import Iterable, Optional, Sequence

import numpy as np
import structlog

from ...census import CENSUS_MAX_DIMENSION, iter_orientable, random_bott_matrix, random_orientable
from ...cohomology import (
    beta2,
    beta2_kernel_dim,
    has_spin,
    img_rho2_rank,
    s1_basis,
    s2_basis,
    square_reduction_in_s1,
)
from ...core import (
    BottMatrix,
    DimensionRangeError,
    betti1,
    betti2,
    has_spinc_combinatorial,
    has_spinc_dim5_corollary,
    is_orientable,
)
from ...models import VerificationFailure, VerificationReport
from ...oracles import ISpincOracle
from .interface import IVerificationService

logger = structlog.get_logger(__name__)

MAX_EXHAUSTIVE_DIMENSION = 7


class VerificationService(IVerificationService):
    """Consistency harness over a list of spin^c oracles"""

    def __init__(self, oracles: Sequence[ISpincOracle]):
        if not oracles:
            raise ValueError("At least one spin^c oracle is required")
        self.oracles = list(oracles)

    def verify_oracles(
        self, n_exhaustive_max: int, samples_per_dim: int, seed: int
    ) -> VerificationReport:
        if n_exhaustive_max > MAX_EXHAUSTIVE_DIMENSION:
            raise DimensionRangeError(
                f"Exhaustive verification is limited to n <= {MAX_EXHAUSTIVE_DIMENSION}, "
                f"got {n_exhaustive_max}"
            )
        if samples_per_dim < 0:
            raise ValueError(f"samples_per_dim must be non-negative, got {samples_per_dim}")

        report = VerificationReport()
        for n in range(4, n_exhaustive_max + 1):
            report.exhaustive_dimensions.append(n)
            if self._run(report, n, iter_orientable(n)):
                return report

        rng = np.random.default_rng(seed)
        first_sampled = max(4, n_exhaustive_max + 1)
        for n in range(first_sampled, CENSUS_MAX_DIMENSION + 1):
            if not samples_per_dim:
                break
            report.sampled_dimensions.append(n)
            sample = (random_orientable(n, rng) for _ in range(samples_per_dim))
            if self._run(report, n, sample):
                return report
            unrestricted = (random_bott_matrix(n, rng) for _ in range(samples_per_dim))
            if self._run(report, n, unrestricted):
                return report

        logger.info(
            "Verification passed",
            checked=report.checked,
            exhaustive=report.exhaustive_dimensions,
            sampled=report.sampled_dimensions,
        )
        return report

    def _run(self, report: VerificationReport, n: int, matrices: Iterable[BottMatrix]) -> bool:
        """Check each matrix; returns True once a failure has been recorded"""
        for matrix in matrices:
            report.checked += 1
            failure = self.check_matrix(matrix)
            if failure is not None:
                check, detail = failure
                report.failure = VerificationFailure(
                    check=check, dimension=n, matrix=matrix.to_text(), detail=detail
                )
                logger.error(
                    "Verification failed", check=check, detail=detail, matrix=matrix.to_text()
                )
                return True
        logger.debug("Dimension verified", dimension=n, checked=report.checked)
        return False

    def check_matrix(self, matrix: BottMatrix) -> Optional[tuple[str, str]]:
        """
        Run every check on one matrix.

        Returns:
            (check name, detail) of the first failing check, or None
        """
        n = matrix.n
        expected = n - betti1(matrix) + betti2(matrix)
        rank = img_rho2_rank(matrix)
        if rank != expected or len(s1_basis(matrix)) + len(s2_basis(matrix)) != expected:
            return "img_rho2_basis", f"rank {rank}, expected n - b1 + b2 = {expected}"
        kernel = beta2_kernel_dim(matrix)
        if kernel != expected:
            return "beta2_kernel", f"kernel dimension {kernel}, expected {expected}"
        for poly in s1_basis(matrix) + s2_basis(matrix):
            if beta2(matrix, poly):
                return "beta2_kernel", f"β^(2)({poly}) is nonzero"

        if not is_orientable(matrix):
            return None

        answers = {oracle.name: oracle.decide(matrix) for oracle in self.oracles}
        if len(set(answers.values())) > 1:
            return "oracle_agreement", f"answers {answers}"
        spinc = next(iter(answers.values()))
        if has_spin(matrix) and not spinc:
            return "spin_implies_spinc", "spin but not spin^c"
        if n == 5 and has_spinc_dim5_corollary(matrix) != has_spinc_combinatorial(matrix):
            return "dimension_five", "five-dimensional criterion disagrees with A' columns"
        if not square_reduction_in_s1(matrix):
            return "w2_square_free", "w2 - w2^sf is not in span(S1)"
        return None
