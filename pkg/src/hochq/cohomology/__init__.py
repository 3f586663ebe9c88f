"""Closed-form Hochschild cohomology, invariants, centers and cup products."""

from hochq.cohomology.cup import (
    CupProduct,
    WedgeProduct,
    cup,
    cup_cochains,
    shuffle_coefficient,
    wedge_mul,
    wedge_mul_closed_form,
)
from hochq.cohomology.enumeration import (
    CohomologyClass,
    DegreeTotals,
    DimensionTable,
    center_basis,
    degree_totals,
    gamma_signatures,
    hh_basis,
    hh_dim_table,
    in_C_g,
    invariant_basis,
    skew_center_basis,
)
from hochq.cohomology.families import FamilyParameters, family_parameters, two_variable_families

__all__ = [
    # Enumeration
    "CohomologyClass",
    "DimensionTable",
    "DegreeTotals",
    "in_C_g",
    "gamma_signatures",
    "hh_basis",
    "hh_dim_table",
    "invariant_basis",
    "center_basis",
    "skew_center_basis",
    "degree_totals",
    # Two variables
    "FamilyParameters",
    "family_parameters",
    "two_variable_families",
    # Products
    "WedgeProduct",
    "CupProduct",
    "wedge_mul",
    "wedge_mul_closed_form",
    "shuffle_coefficient",
    "cup",
    "cup_cochains",
]
