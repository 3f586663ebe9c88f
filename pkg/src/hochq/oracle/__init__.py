"""Independent verification: exact linear algebra on the graded pieces of the complex."""

from hochq.oracle.linalg import FieldMatrix, RankKernel, rank, rank_kernel, rref
from hochq.oracle.verifier import (
    DSquaredReport,
    HomotopyCheck,
    InstanceVerifier,
    PieceMatrices,
    ProjectorResult,
    averaging_projector,
    graded_cohomology_dims,
    piece_matrices,
    specialization_bound,
    verify_d_squared,
    verify_homotopy_identity,
    verify_instance,
)

__all__ = [
    # Linear algebra
    "FieldMatrix",
    "RankKernel",
    "rank",
    "rank_kernel",
    "rref",
    # Verification
    "PieceMatrices",
    "HomotopyCheck",
    "ProjectorResult",
    "DSquaredReport",
    "InstanceVerifier",
    "piece_matrices",
    "graded_cohomology_dims",
    "verify_homotopy_identity",
    "averaging_projector",
    "verify_d_squared",
    "specialization_bound",
    "verify_instance",
]
