"""
Census Service Implementation

Splits the enumeration of one dimension into chunks, counts them in a
process pool and sums the per-partition results.
"""

import time
from concurrent.futures import ProcessPoolExecutor
from typing import Optional, Sequence

import structlog

from ...census import (
    PUBLISHED_COUNTS,
    CrossCheckMismatch,
    check_dimension,
    count_chunks,
    cross_check,
    orientable_count,
    partition_chunks,
)
from ...core import DimensionRangeError
from ...models import CensusRow
from .interface import ICensusService

logger = structlog.get_logger(__name__)


class LongRunRefusedError(RuntimeError):
    """Census of a long-running dimension requested without opting in"""
    pass


class CensusService(ICensusService):
    """Census service backed by the numba kernel and a process pool"""

    def __init__(
        self,
        workers: int = 1,
        min_dimension: int = 4,
        max_dimension: int = 10,
        long_run_dimension: int = 10,
        cross_check_stride: int = 1024,
        timing: bool = True,
    ):
        if workers < 1:
            raise ValueError(f"workers must be >= 1, got {workers}")
        self.workers = workers
        self.min_dimension = min_dimension
        self.max_dimension = max_dimension
        self.long_run_dimension = long_run_dimension
        self.cross_check_stride = cross_check_stride
        self.timing = timing

    def census(self, n: int, workers: Optional[int] = None) -> CensusRow:
        check_dimension(n)
        workers = workers or self.workers
        partitions = partition_chunks(n, workers)

        logger.info(
            "Starting census", dimension=n, workers=workers, partitions=len(partitions)
        )
        start = time.perf_counter()
        if len(partitions) == 1:
            visited, spinc, spin = count_chunks(n, partitions[0])
        else:
            visited = spinc = spin = 0
            with ProcessPoolExecutor(max_workers=len(partitions)) as pool:
                futures = [pool.submit(count_chunks, n, part) for part in partitions]
                for future in futures:
                    v, c, s = future.result()
                    visited += v
                    spinc += c
                    spin += s
        elapsed = time.perf_counter() - start

        expected = orientable_count(n)
        if visited != expected:
            raise RuntimeError(f"Visited {visited} matrices, expected {expected}")

        published = PUBLISHED_COUNTS.get(n)
        row = CensusRow(
            dimension=n,
            orientable=visited,
            spinc=spinc,
            spin=spin,
            elapsed=elapsed if self.timing else None,
            published_spinc=published[0] if published else None,
            published_spin=published[1] if published else None,
        )
        logger.info(
            "Census finished",
            dimension=n,
            orientable=visited,
            spinc=spinc,
            spin=spin,
            elapsed=round(elapsed, 3),
            matches_published=row.matches_published,
        )
        return row

    def census_range(
        self,
        dimensions: Sequence[int],
        workers: Optional[int] = None,
        allow_long: bool = False,
    ) -> list[CensusRow]:
        ordered = sorted(set(dimensions))
        for n in ordered:
            if not self.min_dimension <= n <= self.max_dimension:
                raise DimensionRangeError(
                    f"Dimension {n} outside {self.min_dimension}..{self.max_dimension}"
                )
        long_runs = [n for n in ordered if n >= self.long_run_dimension]
        if long_runs and not allow_long:
            n = long_runs[0]
            raise LongRunRefusedError(
                f"Dimension {n} visits 2^{(n - 1) * (n - 2) // 2} matrices "
                f"(hours of CPU time); pass --allow-long to run it"
            )
        return [self.census(n, workers) for n in ordered]

    def cross_check(self, n: int, stride: Optional[int] = None) -> Optional[CrossCheckMismatch]:
        return cross_check(n, stride or self.cross_check_stride)
