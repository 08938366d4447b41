"""F2 cohomology of real Bott manifolds: ring, characteristic classes, Bockstein"""

from .bockstein import beta2, beta2_columns, beta2_image, beta2_kernel_dim, has_spinc_bockstein
from .classes import (
    alphas,
    has_spin,
    square_classes,
    total_sw_classes,
    w1,
    w2_reduced,
    w2_square_free,
    w3_reduced,
)
from .criterion import alpha_primes, w2_prime, w2_prime_condition
from .image import (
    has_spinc_linear,
    img_rho2_basis,
    img_rho2_rank,
    s1_basis,
    s2_basis,
    square_reduction_in_s1,
    w2_in_square_span,
)
from .polynomial import F2Poly, Monomial
from .ring import RewriteStrategy, alpha, f2_cohomology_dims, mul_reduced, normal_form, square

__all__ = [
    "Monomial",
    "F2Poly",
    "RewriteStrategy",
    "alpha",
    "alphas",
    "normal_form",
    "mul_reduced",
    "square",
    "f2_cohomology_dims",
    "w1",
    "w2_reduced",
    "w3_reduced",
    "total_sw_classes",
    "w2_square_free",
    "has_spin",
    "square_classes",
    "s1_basis",
    "s2_basis",
    "img_rho2_basis",
    "img_rho2_rank",
    "has_spinc_linear",
    "w2_in_square_span",
    "square_reduction_in_s1",
    "beta2_image",
    "beta2",
    "beta2_columns",
    "beta2_kernel_dim",
    "has_spinc_bockstein",
    "w2_prime",
    "alpha_primes",
    "w2_prime_condition",
]
