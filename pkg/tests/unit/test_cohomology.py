"""
Tests for the F2 cohomology ring, characteristic classes and the Bockstein
"""

import pytest

from bott_spinc.census import iter_orientable
from bott_spinc.cohomology import (
    F2Poly,
    Monomial,
    alpha,
    alpha_primes,
    beta2,
    beta2_image,
    beta2_kernel_dim,
    f2_cohomology_dims,
    has_spin,
    has_spinc_bockstein,
    has_spinc_linear,
    img_rho2_rank,
    mul_reduced,
    normal_form,
    s1_basis,
    s2_basis,
    square_classes,
    square_reduction_in_s1,
    total_sw_classes,
    w1,
    w2_in_square_span,
    w2_prime,
    w2_prime_condition,
    w2_reduced,
    w2_square_free,
    w3_reduced,
)
from bott_spinc.core import (
    BottMatrix,
    MatrixIndexError,
    NotOrientableError,
    has_spinc_combinatorial,
)


def render(polys):
    return [poly.render() for poly in polys]


@pytest.mark.unit
class TestPolynomial:
    def test_render(self):
        poly = F2Poly.from_masks(4, [0b1010, 0b0101, 0b0011])
        assert poly.render() == "x1*x2 + x1*x3 + x2*x4"
        assert F2Poly.zero(4).render() == "0"
        assert F2Poly.one(4).render() == "1"

    def test_addition_cancels(self):
        x1 = F2Poly.variable(3, 1)
        assert (x1 + x1).is_zero()

    def test_monomial_rejects_repeats(self):
        with pytest.raises(ValueError):
            Monomial.of(2, 2)

    def test_b2_coordinates(self):
        poly = F2Poly.monomial(4, 1, 2) + F2Poly.monomial(4, 3, 4)
        assert list(poly.to_b2_vector().indices()) == [0, 5]

    def test_b2_requires_degree_two(self):
        with pytest.raises(ValueError):
            F2Poly.variable(4, 1).to_b2_vector()


@pytest.mark.unit
class TestRing:
    def test_alpha(self, a5):
        """α_j is read off column j"""
        assert alpha(a5, 3).render() == "x1 + x2"
        assert alpha(a5, 5).render() == "x3"
        assert alpha(BottMatrix.zero(4), 2).is_zero()

    def test_alpha_bounds(self, a5):
        with pytest.raises(MatrixIndexError):
            alpha(a5, 6)

    def test_multiply_by_zero(self, a5):
        assert mul_reduced(a5, F2Poly.variable(5, 2), F2Poly.zero(5)).is_zero()

    def test_square_vanishes_on_zero_column(self):
        x = F2Poly.variable(4, 3)
        assert mul_reduced(BottMatrix.zero(4), x, x).is_zero()

    def test_square_rewrites(self, a5):
        """x2^2 = α2 x2 = x1 x2"""
        x2 = F2Poly.variable(5, 2)
        assert mul_reduced(a5, x2, x2).render() == "x1*x2"

    def test_strategies_agree(self, a5):
        for exponents in [(0, 2, 2, 0, 0), (1, 0, 3, 0, 1), (0, 0, 2, 2, 2)]:
            assert normal_form(a5, exponents, "highest") == normal_form(a5, exponents, "lowest")

    def test_dimensions(self):
        assert f2_cohomology_dims(5) == (5, 10, 10)


@pytest.mark.unit
class TestStiefelWhitney:
    def test_w1(self, a5, non_orientable3):
        """w1 vanishes exactly on orientable matrices"""
        assert w1(BottMatrix.zero(4)).is_zero()
        assert w1(non_orientable3).render() == "x1"
        assert w1(a5).is_zero()

    def test_w2_reduced(self, a5, sparse5):
        assert w2_reduced(BottMatrix.zero(4)).is_zero()
        assert w2_reduced(sparse5).is_zero()
        assert w2_reduced(a5).render() == "x1*x3"

    def test_total_class(self, a5):
        classes = total_sw_classes(a5)
        assert len(classes) == 4
        assert classes[0] == F2Poly.one(5)
        assert classes[1] == w1(a5)
        assert classes[2] == w2_reduced(a5)
        assert classes[3] == w3_reduced(a5)
        assert classes[3].is_homogeneous(3)

    def test_w2_square_free(self, a5):
        """Coefficients are the row scalar products"""
        assert w2_square_free(BottMatrix.zero(4)).is_zero()
        assert w2_square_free(a5).render() == "x1*x2 + x2*x3"

    def test_w2_square_free_requires_orientable(self, non_orientable3):
        with pytest.raises(NotOrientableError):
            w2_square_free(non_orientable3)

    def test_has_spin(self, a5, sparse5):
        assert has_spin(BottMatrix.zero(4))
        assert has_spin(sparse5)
        assert not has_spin(a5)

    def test_has_spin_requires_orientable(self, non_orientable3):
        with pytest.raises(NotOrientableError):
            has_spin(non_orientable3)

    def test_every_n4_matrix_is_spin(self):
        """w2 reduces to zero on all eight orientable four-dimensional matrices"""
        assert sum(has_spin(matrix) for matrix in iter_orientable(4)) == 8

    def test_square_classes(self, a5):
        assert render(square_classes(a5)) == [
            "0",
            "x1*x2",
            "x1*x3 + x2*x3",
            "x2*x4 + x3*x4",
            "x3*x5",
        ]


@pytest.mark.unit
class TestImageOfReduction:
    def test_s1(self, a5):
        assert s1_basis(BottMatrix.zero(4)) == []
        assert render(s1_basis(a5)) == ["x1*x2", "x1*x3 + x2*x3", "x2*x4 + x3*x4", "x3*x5"]

    def test_s2(self, sparse5):
        assert len(s2_basis(BottMatrix.zero(4))) == 6
        assert render(s2_basis(sparse5)) == ["x1*x4", "x1*x5", "x2*x3", "x4*x5"]
        assert s2_basis(BottMatrix.from_entries(3, [(1, 2), (1, 3), (2, 3)])) == []

    def test_rank(self, a5, sparse5):
        assert img_rho2_rank(a5) == 4
        assert img_rho2_rank(sparse5) == 6

    def test_has_spinc_linear(self, a5):
        assert has_spinc_linear(BottMatrix.zero(5))
        assert not has_spinc_linear(a5)
        assert all(has_spinc_linear(matrix) for matrix in iter_orientable(4))

    def test_has_spinc_linear_requires_orientable(self, non_orientable3):
        with pytest.raises(NotOrientableError):
            has_spinc_linear(non_orientable3)

    def test_square_span(self, a5, sparse5):
        """w2 = x1 x3 is not a sum of squares for A5"""
        assert not w2_in_square_span(a5)
        assert w2_in_square_span(sparse5)

    def test_square_reduction(self, a5):
        assert square_reduction_in_s1(a5)


@pytest.mark.unit
class TestBockstein:
    def test_zero_matrix(self):
        zero = BottMatrix.zero(5)
        assert beta2_image(zero, 2, 4).is_zero()
        assert beta2_kernel_dim(zero) == 10

    def test_equal_columns(self, sparse5):
        """Columns 2 and 3 of sparse5 coincide"""
        assert beta2_image(sparse5, 2, 3).is_zero()

    def test_a5(self, a5):
        """(α1 + α2) x1 x2 = x1^2 x2 = 0 since α1 = 0"""
        assert beta2_image(a5, 1, 2).is_zero()
        assert beta2(a5, w2_reduced(a5)).render() == "x1*x2*x3"

    def test_bounds(self, a5):
        with pytest.raises(MatrixIndexError):
            beta2_image(a5, 3, 3)
        with pytest.raises(MatrixIndexError):
            beta2_image(a5, 4, 2)

    def test_kernel_dimension(self, a5, sparse5):
        assert beta2_kernel_dim(a5) == 4
        assert beta2_kernel_dim(sparse5) == 6

    def test_has_spinc_bockstein(self, a5):
        assert has_spinc_bockstein(BottMatrix.zero(5))
        assert not has_spinc_bockstein(a5)


@pytest.mark.unit
class TestSquareFreeCondition:
    def test_zero(self):
        assert w2_prime_condition(BottMatrix.zero(5))

    def test_a5(self, a5):
        """α3' = x2 is neither 0 nor α3 = x1 + x2"""
        assert w2_prime(a5).render() == "x1*x2 + x2*x3"
        assert alpha_primes(a5)[2].render() == "x2"
        assert not w2_prime_condition(a5)

    def test_removes_equal_column_monomials(self, sparse5):
        assert all(
            term not in w2_prime(sparse5).terms for term in (Monomial.of(2, 3), Monomial.of(1, 4))
        )

    def test_matches_combinatorial_n6(self):
        for matrix in iter_orientable(6):
            assert w2_prime_condition(matrix) == has_spinc_combinatorial(matrix)
