"""Data models for instance files, results and reports."""

from typing import Literal, Optional, Union

from pydantic import BaseModel, Field


class ScalarRecord(BaseModel):
    """t^free * zeta^torsion."""

    free: list[int] = Field(default_factory=list)
    torsion: int = 0


class ScalarGroupRecord(BaseModel):
    """Number of generic parameters and order of the root of unity."""

    free_rank: int = Field(default=0, ge=0)
    torsion_order: int = Field(default=1, ge=1)


class GroupRecord(BaseModel):
    """Generators of the diagonal group, one character per generator.

    Entries are torsion exponents (ints) or full scalars; the closure is computed
    on load.
    """

    generators: list[list[Union[int, ScalarRecord]]] = Field(default_factory=list)


class InstanceFile(BaseModel):
    """An instance as stored on disk. q is given on pairs i < j in lexicographic order."""

    name: Optional[str] = None
    n: int = Field(ge=1)
    scalar_group: ScalarGroupRecord = Field(default_factory=ScalarGroupRecord)
    q_exponents: list[ScalarRecord] = Field(default_factory=list)
    group: GroupRecord = Field(default_factory=GroupRecord)
    degree_cap: Optional[int] = Field(default=None, ge=0)


class ClassRecord(BaseModel):
    """Basis class (x^alpha # g) (x) (x*)^beta."""

    g: int = Field(ge=0)
    alpha: list[int]
    beta: list[int]


class SignedScalarRecord(BaseModel):
    sign: int
    free: list[int] = Field(default_factory=list)
    torsion: int = 0


class CupRecord(BaseModel):
    """Result of the `cup` command."""

    left: ClassRecord
    right: ClassRecord
    scalar: Optional[SignedScalarRecord] = None
    result: Union[ClassRecord, Literal["zero"]]
    reason: Optional[str] = None


class DimensionRow(BaseModel):
    g_id: int
    m: int
    internal_degree: int
    dim: int
    invariant_dim: int


class CenterRecord(BaseModel):
    alpha: list[int]
    g: int = 0


class FamilyRecord(BaseModel):
    """Two-variable congruence data for one group element."""

    g: int
    ell: int
    ell1: Optional[int] = None
    ell2: Optional[int] = None
    classes: dict[int, list[ClassRecord]] = Field(default_factory=dict)


class PieceRecord(BaseModel):
    """Oracle outcome for one graded piece K_{g,gamma}."""

    g: int
    gamma: list[int]
    in_c: bool
    dims_enumerated: list[int]
    dims_oracle: list[int]
    dims_second: list[int] = Field(default_factory=list)
    d_squared_ok: bool = True
    homotopy_ok: Optional[bool] = None
    match: bool = False


class ProjectorRecord(BaseModel):
    """Averaging projector rank against the enumerated invariants at one cell."""

    m: int
    internal_degree: int
    projector_rank: int
    enumerated: int
    idempotent: bool
    match: bool


class VerificationReport(BaseModel):
    """End-to-end comparison of the closed form with the complex."""

    instance_hash: Optional[str] = None
    n: int
    group_order: int
    degree_cap: int
    seed: int
    target_order: int
    second_target_order: int
    pieces: list[PieceRecord] = Field(default_factory=list)
    projectors: list[ProjectorRecord] = Field(default_factory=list)
    homotopy_checked: int = 0
    passed: bool = False

    def first_failure(self) -> Optional[str]:
        for piece in self.pieces:
            if not piece.match:
                return f"g={piece.g} gamma={piece.gamma}"
        for proj in self.projectors:
            if not proj.match:
                return f"projector m={proj.m} d={proj.internal_degree}"
        return None

    def totals(self) -> dict[int, int]:
        """Enumerated dims summed per cohomological degree over the pieces."""
        out: dict[int, int] = {}
        for piece in self.pieces:
            for m, dim in enumerate(piece.dims_enumerated):
                out[m] = out.get(m, 0) + dim
        return out


class MembershipRecord(BaseModel):
    position: int
    success: bool
    first_failure: Optional[str] = None


class ChainMapRecord(BaseModel):
    """Result of the `chainmap-check` command."""

    n: int
    m: int
    trials: int
    seed: int
    success: bool
    first_failure: Optional[list[int]] = None
    failing_trial: Optional[int] = None
    membership: list[MembershipRecord] = Field(default_factory=list)
    q_pi_peel_ok: bool = True
