"""The quantum symmetric algebra S_q(V) and its diagonal skew group extension."""

from hochq.algebra.group_ring import GroupRingElement, LinearCombination
from hochq.algebra.instance import DiagonalGroupSpec, QInstance, QMatrix, validate_instance
from hochq.algebra.monomials import (
    Monomial,
    WedgeIndex,
    act,
    mono_mul,
    normal_order,
    normal_order_by_rewriting,
    q_pi,
    skew_mul,
)

__all__ = [
    # Instance data
    "QMatrix",
    "DiagonalGroupSpec",
    "QInstance",
    "validate_instance",
    # Coefficients
    "GroupRingElement",
    "LinearCombination",
    # Rewriting
    "Monomial",
    "WedgeIndex",
    "normal_order",
    "normal_order_by_rewriting",
    "mono_mul",
    "q_pi",
    "skew_mul",
    "act",
]
