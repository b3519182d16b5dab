"""Exact algebra: sparse polynomials, permanents, box coefficient extraction, cyclotomic integers."""

from .cyclotomic import CyclotomicInt, cyclotomic_multiply, is_prime
from .permanent import RingMatrix, naive_permanent, ryser_permanent
from .poly import (
    DimensionError,
    LinearForm,
    LinearProduct,
    SparsePolynomial,
    coefficient,
    expand_linear_product,
)
from .scheim import box_points, scheim_coefficient, scheim_sum

__all__ = [
    "CyclotomicInt",
    "DimensionError",
    "LinearForm",
    "LinearProduct",
    "RingMatrix",
    "SparsePolynomial",
    "box_points",
    "coefficient",
    "cyclotomic_multiply",
    "expand_linear_product",
    "is_prime",
    "naive_permanent",
    "ryser_permanent",
    "scheim_coefficient",
    "scheim_sum",
]
