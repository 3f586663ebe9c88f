"""Exact scalar arithmetic: exponent group, cyclotomic fields, specializations."""

from hochq.arithmetic.cyclotomic import CyclotomicNumber, cyc_arith, cyclotomic_polynomial
from hochq.arithmetic.scalars import (
    ScalarExponent,
    ScalarGroupSpec,
    is_one,
    scalar_mul,
    scalar_pow,
)
from hochq.arithmetic.specialization import Specialization, choose_specialization, specialize

__all__ = [
    # Scalar group
    "ScalarGroupSpec",
    "ScalarExponent",
    "scalar_mul",
    "scalar_pow",
    "is_one",
    # Cyclotomic fields
    "CyclotomicNumber",
    "cyc_arith",
    "cyclotomic_polynomial",
    # Specialization
    "Specialization",
    "choose_specialization",
    "specialize",
]
