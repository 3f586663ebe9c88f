"""Cochain complexes: the dual Koszul complex, the bar resolution and the map between them."""

from hochq.complexes.bar import (
    BarTensor,
    ChainMapReport,
    MembershipReport,
    apply_koszul_then_phi,
    bar_delta,
    phi,
    relation_membership,
    verify_chain_map,
    verify_q_pi_peel,
)
from hochq.complexes.koszul import (
    CochainKey,
    GradedSignature,
    SymbolicCochain,
    d_star,
    d_star_module_action,
    epsilon,
    graded_piece_basis,
    homotopy_h,
    koszul_d,
    omega_big,
)

__all__ = [
    # Koszul side
    "CochainKey",
    "SymbolicCochain",
    "GradedSignature",
    "epsilon",
    "omega_big",
    "d_star",
    "d_star_module_action",
    "graded_piece_basis",
    "homotopy_h",
    "koszul_d",
    # Bar side
    "BarTensor",
    "ChainMapReport",
    "MembershipReport",
    "bar_delta",
    "phi",
    "apply_koszul_then_phi",
    "verify_chain_map",
    "relation_membership",
    "verify_q_pi_peel",
]
