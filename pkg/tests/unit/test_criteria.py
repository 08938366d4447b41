"""
Tests for orientability, Betti numbers and the derived-matrix criterion
"""

import pytest

from bott_spinc.census import iter_orientable
from bott_spinc.core import (
    BottMatrix,
    DimensionRangeError,
    MatrixIndexError,
    NotOrientableError,
    betti1,
    betti2,
    derived_matrix,
    equal_column_pairs,
    failing_columns,
    h1_z_rank,
    has_spinc_combinatorial,
    has_spinc_dim5_corollary,
    homology_report,
    is_orientable,
    row_dot,
    structure_string,
)


@pytest.mark.unit
class TestOrientability:
    def test_zero_matrix(self):
        assert is_orientable(BottMatrix.zero(6))

    def test_odd_row(self, non_orientable3):
        assert not is_orientable(non_orientable3)

    def test_a5(self, a5):
        assert is_orientable(a5)


@pytest.mark.unit
class TestBetti:
    def test_zero_matrix(self):
        """Every column is zero and all columns are equal"""
        assert betti1(BottMatrix.zero(5)) == 5
        assert betti2(BottMatrix.zero(5)) == 10

    def test_sparse5(self, sparse5):
        """Columns 1, 4, 5 vanish; pairs (1,4), (1,5), (4,5), (2,3) are equal"""
        assert betti1(sparse5) == 3
        assert betti2(sparse5) == 4
        assert equal_column_pairs(sparse5) == [(1, 4), (1, 5), (2, 3), (4, 5)]

    def test_a5(self, a5):
        """Only column 1 of A5 is zero and its columns are pairwise distinct"""
        assert betti1(a5) == 1
        assert betti2(a5) == 0

    def test_distinct_columns(self):
        matrix = BottMatrix.from_entries(3, [(1, 2), (1, 3), (2, 3)])
        assert betti2(matrix) == 0

    def test_zero_and_nonzero_columns_partition(self, a5):
        assert betti1(a5) + sum(1 for column in a5.columns if column) == a5.n

    def test_h1_z_rank_is_b1(self, a5, sparse5):
        assert h1_z_rank(a5) == 1
        assert h1_z_rank(sparse5) == 3


@pytest.mark.unit
class TestHomologyReport:
    def test_zero_matrix(self, zero4):
        report = homology_report(zero4)
        assert report.h1 == "Z^4"
        assert report.h1_torsion_rank == 0
        assert report.h2_free_rank == 6
        assert report.dim_img_rho2 == 6

    def test_sparse5(self, sparse5):
        report = homology_report(sparse5)
        assert report.h1 == "Z^3 + (Z/2)^2"
        assert report.h2z == "Z^4 + (Z/2)^2"
        assert report.h1z == "Z^3"
        assert report.dim_img_rho2 == 6

    def test_a5(self, a5):
        report = homology_report(a5)
        assert report.dim_img_rho2 == 5 - 1 + 0
        assert report.h2z == "(Z/2)^4"

    def test_structure_string(self):
        assert structure_string(0, 0) == "0"
        assert structure_string(2, 0) == "Z^2"
        assert structure_string(0, 3) == "(Z/2)^3"


@pytest.mark.unit
class TestRowDot:
    def test_zero_row(self, a5):
        assert row_dot(a5, 1, 4) == 0

    def test_a5(self, a5):
        """Rows 2 and 3 share column 4; rows 1 and 3 share nothing"""
        assert row_dot(a5, 2, 3) == 1
        assert row_dot(a5, 1, 3) == 0
        assert row_dot(a5, 1, 2) == 1

    def test_bounds(self, a5):
        with pytest.raises(MatrixIndexError):
            row_dot(a5, 0, 2)


@pytest.mark.unit
class TestDerivedMatrix:
    def test_zero_matrix(self, zero4):
        assert derived_matrix(zero4) == zero4

    def test_a5(self, a5):
        """A'^(3) = (0,1,0,0,0) while A^(3) = (1,1,0,0,0)"""
        derived = derived_matrix(a5)
        assert derived.column(3) == 0b10
        assert derived.entry(1, 2) == 1
        assert derived.entry(1, 3) == 0
        assert failing_columns(a5) == [3]

    def test_sparse5(self, sparse5):
        assert derived_matrix(sparse5).column(3) == 0

    def test_requires_orientable(self, non_orientable3):
        with pytest.raises(NotOrientableError):
            derived_matrix(non_orientable3)

    def test_strictly_upper_triangular(self):
        for matrix in iter_orientable(6):
            derived = derived_matrix(matrix)
            for i, mask in enumerate(derived.rows):
                assert mask & ((1 << (i + 1)) - 1) == 0


@pytest.mark.unit
class TestSpincCombinatorial:
    def test_every_n4_matrix(self):
        """Vacuously true in dimension four"""
        assert all(has_spinc_combinatorial(matrix) for matrix in iter_orientable(4))

    def test_a5(self, a5):
        assert not has_spinc_combinatorial(a5)

    def test_sparse5(self, sparse5):
        assert has_spinc_combinatorial(sparse5)

    def test_requires_orientable(self, non_orientable3):
        with pytest.raises(NotOrientableError):
            has_spinc_combinatorial(non_orientable3)


@pytest.mark.unit
class TestDimensionFive:
    def test_zero(self):
        assert has_spinc_dim5_corollary(BottMatrix.zero(5))

    def test_a5(self, a5):
        assert not has_spinc_dim5_corollary(a5)

    def test_a12_zero(self):
        assert has_spinc_dim5_corollary(BottMatrix.from_entries(5, [(3, 4), (3, 5)]))

    def test_wrong_dimension(self, zero4):
        with pytest.raises(DimensionRangeError):
            has_spinc_dim5_corollary(zero4)

    def test_agrees_with_derived_matrix(self):
        """All 64 orientable matrices of dimension five"""
        matrices = list(iter_orientable(5))
        assert len(matrices) == 64
        for matrix in matrices:
            assert has_spinc_dim5_corollary(matrix) == has_spinc_combinatorial(matrix)

    def test_failing_count(self):
        """A_(3) != 0, a12 = 1 and a23 = 1 together: 1 * 4 * 2 matrices"""
        failing = [m for m in iter_orientable(5) if not has_spinc_dim5_corollary(m)]
        assert len(failing) == 8
