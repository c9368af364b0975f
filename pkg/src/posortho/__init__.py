"""Exact construction and verification of positive orthogonal step functions
for sums of spaces of periodic functions with integer periods."""

from .builder import (
    StepProfile,
    build,
    build_h1,
    build_h2,
    build_h3,
    build_h4,
    coeff_by_division,
    coeff_closed_form,
    h2_block_profile,
)
from .classifier import (
    SignClass,
    classify,
    is_palindrome,
    predict_h3_sign,
    prop71_hypothesis,
    prop72_family,
)
from .oracle import OrthoReport, minimal_orthogonal, nullspace_dimension, verify_orthogonality
from .periods import PeriodSet, PqrDecomposition, critical_length_3, gcd_all, normalize, pqr_decompose
from .polynomial import IntPolynomial, exact_div, geometric_quotient, mul, residue_class_sums

__all__ = [
    "IntPolynomial", "OrthoReport", "PeriodSet", "PqrDecomposition", "SignClass", "StepProfile",
    "build", "build_h1", "build_h2", "build_h3", "build_h4", "classify", "coeff_by_division",
    "coeff_closed_form", "critical_length_3", "exact_div", "gcd_all", "geometric_quotient",
    "h2_block_profile", "is_palindrome", "minimal_orthogonal", "mul", "normalize",
    "nullspace_dimension", "pqr_decompose", "predict_h3_sign", "prop71_hypothesis",
    "prop72_family", "residue_class_sums", "verify_orthogonality",
]
