"""
Tests for enumeration, the census kernel and the census service
"""

import numpy as np
import pytest

from bott_spinc.census import (
    PUBLISHED_COUNTS,
    chunk_heads,
    classify_fast,
    count_chunks,
    cross_check,
    enumerate_orientable,
    iter_orientable,
    matrix_at,
    orientable_count,
    partition_chunks,
    random_bott_matrix,
    random_orientable,
)
from bott_spinc.cohomology import has_spin
from bott_spinc.core import DimensionRangeError, has_spinc_combinatorial, is_orientable
from bott_spinc.services.census import CensusService, LongRunRefusedError


@pytest.mark.unit
class TestEnumeration:
    @pytest.mark.parametrize("n, expected", [(4, 8), (5, 64), (6, 1024), (7, 32768)])
    def test_visits_every_matrix_once(self, n, expected):
        """2^C(n-1,2) distinct orientable matrices"""
        seen = []
        assert enumerate_orientable(n, seen.append) == expected
        assert len(set(seen)) == expected
        assert all(is_orientable(matrix) for matrix in seen)

    def test_orientable_count(self):
        assert orientable_count(8) == 2_097_152

    def test_last_rows_zero(self):
        for matrix in iter_orientable(6):
            assert matrix.row(5) == 0
            assert matrix.row(6) == 0

    def test_dimension_range(self):
        with pytest.raises(DimensionRangeError):
            enumerate_orientable(3, lambda matrix: None)
        with pytest.raises(DimensionRangeError):
            list(iter_orientable(11))

    def test_matrix_at_follows_iteration_order(self):
        for index, matrix in enumerate(iter_orientable(5)):
            assert matrix_at(5, index) == matrix

    def test_chunks(self):
        """2^(2n-5) chunks dealt round-robin"""
        heads = chunk_heads(5)
        assert len(heads) == 32
        partitions = partition_chunks(5, 3)
        assert [len(part) for part in partitions] == [11, 11, 10]
        assert sorted(head for part in partitions for head in part) == heads
        assert len(partition_chunks(4, 100)) == 8

    def test_partition_rejects_zero_workers(self):
        with pytest.raises(ValueError):
            partition_chunks(5, 0)

    def test_random_samplers(self):
        rng = np.random.default_rng(7)
        assert all(is_orientable(random_orientable(9, rng)) for _ in range(50))
        first = [random_bott_matrix(8, np.random.default_rng(3)) for _ in range(2)]
        assert first[0] == first[1]


@pytest.mark.unit
class TestKernel:
    @pytest.mark.parametrize("n", [4, 5, 6])
    def test_matches_oracles(self, n):
        """Bit-level classification equals the full machinery"""
        for matrix in iter_orientable(n):
            assert classify_fast(matrix) == (has_spinc_combinatorial(matrix), has_spin(matrix))

    def test_a5(self, a5):
        assert classify_fast(a5) == (False, False)

    def test_count_chunks_totals(self):
        visited, spinc, spin = count_chunks(5, chunk_heads(5))
        assert (visited, spinc, spin) == (64, 56, 30)

    def test_cross_check(self):
        assert cross_check(5, 1) is None
        assert cross_check(7, 1024) is None


@pytest.mark.unit
class TestCensusService:
    @pytest.fixture
    def service(self):
        return CensusService(workers=1)

    def test_dimension_four(self, service):
        """Every orientable four-dimensional matrix is spin and spin^c"""
        row = service.census(4)
        assert (row.orientable, row.spinc, row.spin) == (8, 8, 8)
        assert row.elapsed is not None

    def test_dimension_five(self, service):
        row = service.census(5)
        assert (row.orientable, row.spinc, row.spin) == (64, 56, 30)
        assert (row.published_spinc, row.published_spin) == PUBLISHED_COUNTS[5]
        assert row.matches_published is False

    def test_independent_of_workers(self, service):
        single = service.census(6, workers=1)
        pooled = service.census(6, workers=3)
        assert (single.orientable, single.spinc, single.spin) == (
            pooled.orientable,
            pooled.spinc,
            pooled.spin,
        )
        assert single.orientable == 1024

    def test_dimension_six_counts(self, service):
        """spin^c matches the published value; spin is the computed snapshot"""
        row = service.census(6)
        assert (row.orientable, row.spinc, row.spin) == (1024, 592, 176)
        assert row.spinc == PUBLISHED_COUNTS[6][0]
        assert row.matches_published is False

    def test_matches_exhaustive_oracles(self, service):
        matrices = list(iter_orientable(6))
        row = service.census(6)
        assert row.spinc == sum(has_spinc_combinatorial(m) for m in matrices)
        assert row.spin == sum(has_spin(m) for m in matrices)

    def test_range_is_sorted(self, service):
        rows = service.census_range([5, 4, 5])
        assert [row.dimension for row in rows] == [4, 5]

    def test_long_run_refused(self, service):
        with pytest.raises(LongRunRefusedError):
            service.census_range([9, 10])

    def test_out_of_range(self, service):
        with pytest.raises(DimensionRangeError):
            service.census_range([3])

    def test_without_timing(self):
        assert CensusService(timing=False).census(4).elapsed is None


@pytest.mark.slow
class TestCensusLong:
    def test_dimension_seven(self):
        service = CensusService(workers=2)
        row = service.census(7)
        assert row.orientable == 32768
        assert (row.spinc, row.spin) == (7968, 1482)
        assert row.spinc == PUBLISHED_COUNTS[7][0]
        matrices = list(iter_orientable(7))
        assert row.spinc == sum(has_spinc_combinatorial(m) for m in matrices)
        assert row.spin == sum(has_spin(m) for m in matrices)

    def test_dimension_eight_workers(self):
        one = CensusService(workers=1).census(8)
        four = CensusService(workers=4).census(8)
        assert (one.spinc, one.spin) == (four.spinc, four.spin)
        assert one.orientable == 2_097_152
        assert (one.spinc, one.spin) == (165712, 17400)
        assert one.spinc == PUBLISHED_COUNTS[8][0]

    def test_dimension_nine(self):
        row = CensusService(workers=4).census(9)
        assert row.orientable == 2**28
        assert (row.spinc, row.spin) == (4669464, 295010)
        assert row.spinc == PUBLISHED_COUNTS[9][0]
        assert cross_check(9, 2**14) is None
