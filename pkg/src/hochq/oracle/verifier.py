"""Brute-force verification of the closed form against the complex itself.

Every graded piece K_{g,gamma} is a finite complex. Its differentials are
specialized into a cyclotomic field and their ranks give the cohomology, which
must match the number of enumerated classes with that signature. Pieces outside
C_g also get the contracting homotopy checked, and every cell of the dimension
table gets an averaging-projector check of the invariant count.
"""

from __future__ import annotations

import logging
import random
from collections.abc import Callable
from concurrent.futures import ThreadPoolExecutor, as_completed
from dataclasses import dataclass, field

from hochq.algebra.instance import QInstance
from hochq.algebra.monomials import act
from hochq.arithmetic.cyclotomic import CyclotomicNumber, field_degree
from hochq.arithmetic.specialization import Specialization, choose_specialization
from hochq.cohomology.enumeration import (
    CohomologyClass,
    gamma_signatures,
    hh_basis,
    in_C_g,
    is_invariant,
)
from hochq.complexes.koszul import (
    CochainKey,
    Gamma,
    OmegaFn,
    basis_cochain,
    d_star,
    graded_piece_basis,
    homotopy_h,
)
from hochq.errors import PreconditionError, StructuralError
from hochq.models.schemas import PieceRecord, ProjectorRecord, VerificationReport
from hochq.oracle.linalg import FieldMatrix, rank

logger = logging.getLogger(__name__)

ProgressFn = Callable[[int, int], None]


@dataclass(frozen=True)
class PieceMatrices:
    """Bases of K_{g,gamma}^m and the matrices of d*: K^m -> K^{m+1}."""

    g: int
    gamma: Gamma
    bases: list[list[CochainKey]]
    differentials: list[FieldMatrix]

    def dims(self) -> list[int]:
        ranks = [rank(d) for d in self.differentials]
        out = []
        for m, basis in enumerate(self.bases):
            outgoing = ranks[m] if m < len(ranks) else 0
            incoming = ranks[m - 1] if m > 0 else 0
            out.append(len(basis) - outgoing - incoming)
        return out


def piece_matrices(
    instance: QInstance, g: int, gamma: Gamma, s: Specialization, *, omega: OmegaFn | None = None
) -> PieceMatrices:
    n = instance.n
    bases = [graded_piece_basis(instance, g, gamma, m) for m in range(n + 1)]
    differentials = []
    for m in range(n):
        source, target = bases[m], bases[m + 1]
        row_of = {key: k for k, key in enumerate(target)}
        data: dict[int, dict[int, CyclotomicNumber]] = {}
        for col, key in enumerate(source):
            image = d_star(instance, m + 1, basis_cochain(instance, key), omega=omega)
            for out_key, coeff in image.items():
                row = row_of.get(out_key)
                if row is None:
                    raise StructuralError(f"d* left the graded piece: {out_key!r}")
                data.setdefault(row, {})[col] = coeff.specialize(s)
        differentials.append(FieldMatrix(len(target), len(source), s.target_order, data))
    return PieceMatrices(g=g, gamma=tuple(gamma), bases=bases, differentials=differentials)


def graded_cohomology_dims(
    instance: QInstance, g: int, gamma: Gamma, s: Specialization, *, omega: OmegaFn | None = None
) -> list[int]:
    """dim H^m(K_{g,gamma}) for m = 0..N, by rank computations."""
    return piece_matrices(instance, g, gamma, s, omega=omega).dims()


def differentials_square_to_zero(pieces: PieceMatrices) -> bool:
    return all(
        (later @ earlier).is_zero()
        for earlier, later in zip(pieces.differentials, pieces.differentials[1:])
    )


def homotopy_matrices(
    instance: QInstance, g: int, gamma: Gamma, bases: list[list[CochainKey]], s: Specialization
) -> list[FieldMatrix | None]:
    """h_m: K^m -> K^{m-1} for m = 1..N (index 0 is None)."""
    one = CyclotomicNumber.one(s.target_order)
    out: list[FieldMatrix | None] = [None]
    for m in range(1, len(bases)):
        source, target = bases[m], bases[m - 1]
        row_of = {key: k for k, key in enumerate(target)}
        data: dict[int, dict[int, CyclotomicNumber]] = {}
        for col, key in enumerate(source):
            for out_key, value in homotopy_h(instance, g, gamma, m, {key: one}, s).items():
                data.setdefault(row_of[out_key], {})[col] = value
        out.append(FieldMatrix(len(target), len(source), s.target_order, data))
    return out


@dataclass(frozen=True)
class HomotopyCheck:
    success: bool
    failing_degree: int | None = None


def verify_homotopy_identity(
    instance: QInstance,
    g: int,
    gamma: Gamma,
    s: Specialization,
    *,
    pieces: PieceMatrices | None = None,
) -> HomotopyCheck:
    """h d* + d* h = id on every K_{g,gamma}^m, exactly."""
    if in_C_g(instance, gamma, g):
        raise PreconditionError(f"gamma={gamma} lies in C_g for g={g}")
    pieces = pieces or piece_matrices(instance, g, gamma, s)
    hs = homotopy_matrices(instance, g, gamma, pieces.bases, s)
    ds = pieces.differentials
    top = len(pieces.bases) - 1
    for m, basis in enumerate(pieces.bases):
        size = len(basis)
        if size == 0:
            continue
        total = FieldMatrix.zeros(size, size, s.target_order)
        if m < top:
            h_up = hs[m + 1]
            if h_up is not None:
                total = total + (h_up @ ds[m])
        if m > 0:
            h_here = hs[m]
            if h_here is not None:
                total = total + (ds[m - 1] @ h_here)
        if total != FieldMatrix.identity(size, s.target_order):
            return HomotopyCheck(False, m)
    return HomotopyCheck(True)


@dataclass(frozen=True)
class ProjectorResult:
    rank: int
    size: int
    idempotent: bool


def averaging_projector(
    instance: QInstance,
    m: int,
    internal_degree: int,
    s: Specialization,
    *,
    classes: list[CohomologyClass] | None = None,
) -> ProjectorResult:
    """Rank of (1/|G|) sum_h h acting on the classes of the cell (m, d)."""
    if classes is None:
        classes = [
            cls
            for g in instance.elements
            for cls in hh_basis(instance, g, m, internal_degree)
            if cls.alpha.degree == internal_degree
        ]
    size = len(classes)
    order = s.target_order
    projector = FieldMatrix.zeros(size, size, order)
    for h in instance.elements:
        action = FieldMatrix(size, size, order, {
            k: {k: s.specialize(act(instance, h, cls.alpha, cls.beta))}
            for k, cls in enumerate(classes)
        })
        projector = projector + action
    weight = CyclotomicNumber.from_rational(order, instance.group_order).inverse()
    projector = projector.scale(weight)
    return ProjectorResult(
        rank=rank(projector), size=size, idempotent=(projector @ projector) == projector
    )


@dataclass(frozen=True)
class DSquaredReport:
    success: bool
    checked: int
    first_failure: tuple[int, Gamma] | None = None


def specialization_bound(instance: QInstance, cap: int, margin: int) -> int:
    """Box needed for every zero test on pieces within the cap."""
    term_bound = instance.max_q_free() * (cap + instance.n)
    return max(1, 2 * term_bound + margin)


def verify_d_squared(
    instance: QInstance,
    cap: int,
    s: Specialization | None = None,
    *,
    margin: int = 2,
    omega: OmegaFn | None = None,
) -> DSquaredReport:
    """D_{m+1} D_m = 0 over the field on every piece within the cap."""
    s = s or choose_specialization(instance.spec, specialization_bound(instance, cap, margin))
    checked = 0
    for g in instance.elements:
        for gamma in gamma_signatures(instance.n, cap):
            checked += 1
            if not differentials_square_to_zero(piece_matrices(instance, g, gamma, s, omega=omega)):
                return DSquaredReport(False, checked, (g, gamma))
    return DSquaredReport(True, checked)


@dataclass(frozen=True)
class _PieceJob:
    g: int
    gamma: Gamma
    enumerated: list[int]
    check_homotopy: bool


@dataclass
class InstanceVerifier:
    """Runs the oracle over every piece of an instance within a degree cap."""

    instance: QInstance
    degree_cap: int
    seed: int = 7
    max_workers: int = 1
    homotopy_sample_size: int = 200
    margin: int = 2
    omega: OmegaFn | None = None
    instance_hash: str | None = None
    max_field_degree: int | None = None
    primary: Specialization = field(init=False)
    second: Specialization = field(init=False)

    def __post_init__(self) -> None:
        bound = specialization_bound(self.instance, self.degree_cap, self.margin)
        limit = self.max_field_degree
        self.primary = choose_specialization(self.instance.spec, bound, max_field_degree=limit)
        self.second = choose_specialization(
            self.instance.spec, bound, variant=1, max_field_degree=limit
        )
        logger.info(
            "Oracle fields: Q(zeta_%d) and Q(zeta_%d) of degree %d and %d, box %d",
            self.primary.target_order, self.second.target_order,
            field_degree(self.primary.target_order), field_degree(self.second.target_order),
            bound,
        )

    def verify_piece(self, job: _PieceJob) -> PieceRecord:
        pieces = piece_matrices(self.instance, job.g, job.gamma, self.primary, omega=self.omega)
        dims = pieces.dims()
        second = graded_cohomology_dims(
            self.instance, job.g, job.gamma, self.second, omega=self.omega
        )
        d_squared_ok = differentials_square_to_zero(pieces)
        homotopy_ok: bool | None = None
        if job.check_homotopy:
            homotopy_ok = verify_homotopy_identity(
                self.instance, job.g, job.gamma, self.primary, pieces=pieces
            ).success
        match = (
            dims == job.enumerated
            and second == dims
            and d_squared_ok
            and homotopy_ok is not False
        )
        if not match:
            logger.warning(
                "Piece mismatch g=%d gamma=%s: enumerated=%s oracle=%s second=%s d2=%s h=%s",
                job.g, job.gamma, job.enumerated, dims, second, d_squared_ok, homotopy_ok,
            )
        else:
            logger.debug("Piece g=%d gamma=%s dims=%s", job.g, job.gamma, dims)
        return PieceRecord(
            g=job.g,
            gamma=list(job.gamma),
            in_c=in_C_g(self.instance, job.gamma, job.g),
            dims_enumerated=job.enumerated,
            dims_oracle=dims,
            dims_second=second,
            d_squared_ok=d_squared_ok,
            homotopy_ok=homotopy_ok,
            match=match,
        )

    def verify_batch(
        self, jobs: list[_PieceJob], on_progress: ProgressFn | None = None
    ) -> list[PieceRecord]:
        total = len(jobs)
        if total == 0:
            return []

        if self.max_workers <= 1:
            records: list[PieceRecord] = []
            for i, job in enumerate(jobs):
                records.append(self.verify_piece(job))
                if on_progress:
                    on_progress(i + 1, total)
            return records

        results: list[PieceRecord | None] = [None] * total
        completed = 0

        with ThreadPoolExecutor(max_workers=self.max_workers) as executor:
            future_map = {}
            for idx, job in enumerate(jobs):
                future = executor.submit(self.verify_piece, job)
                future_map[future] = idx

            for future in as_completed(future_map):
                idx = future_map[future]
                results[idx] = future.result()
                completed += 1
                if on_progress:
                    on_progress(completed, total)

        return [record for record in results if record is not None]

    def build_jobs(self) -> list[_PieceJob]:
        instance, n = self.instance, self.instance.n
        outer = self.degree_cap + n
        jobs: list[_PieceJob] = []
        for g in instance.elements:
            counts: dict[Gamma, list[int]] = {}
            for m in range(n + 1):
                for cls in hh_basis(instance, g, m, outer):
                    counts.setdefault(cls.key.gamma, [0] * (n + 1))[m] += 1
            for gamma in gamma_signatures(n, self.degree_cap):
                enumerated = counts.get(gamma, [0] * (n + 1))
                jobs.append(_PieceJob(g, gamma, enumerated, check_homotopy=False))

        outside = [k for k, job in enumerate(jobs) if not in_C_g(instance, job.gamma, job.g)]
        rng = random.Random(self.seed)
        sampled = set(rng.sample(outside, min(self.homotopy_sample_size, len(outside))))
        return [
            _PieceJob(job.g, job.gamma, job.enumerated, check_homotopy=k in sampled)
            for k, job in enumerate(jobs)
        ]

    def verify_projectors(self) -> list[ProjectorRecord]:
        instance = self.instance
        records = []
        for m in range(instance.n + 1):
            by_degree: dict[int, list[CohomologyClass]] = {}
            for g in instance.elements:
                for cls in hh_basis(instance, g, m, self.degree_cap):
                    by_degree.setdefault(cls.alpha.degree, []).append(cls)
            for d in range(self.degree_cap + 1):
                classes = by_degree.get(d, [])
                result = averaging_projector(instance, m, d, self.primary, classes=classes)
                enumerated = sum(1 for cls in classes if is_invariant(instance, cls.key))
                records.append(ProjectorRecord(
                    m=m,
                    internal_degree=d,
                    projector_rank=result.rank,
                    enumerated=enumerated,
                    idempotent=result.idempotent,
                    match=result.idempotent and result.rank == enumerated,
                ))
        return records

    def run(self, on_progress: ProgressFn | None = None) -> VerificationReport:
        jobs = self.build_jobs()
        logger.info("Verifying %d pieces (cap %d)", len(jobs), self.degree_cap)
        pieces = sorted(self.verify_batch(jobs, on_progress), key=lambda p: (p.g, p.gamma))
        projectors = self.verify_projectors()
        passed = all(p.match for p in pieces) and all(p.match for p in projectors)
        report = VerificationReport(
            instance_hash=self.instance_hash,
            n=self.instance.n,
            group_order=self.instance.group_order,
            degree_cap=self.degree_cap,
            seed=self.seed,
            target_order=self.primary.target_order,
            second_target_order=self.second.target_order,
            pieces=pieces,
            projectors=projectors,
            homotopy_checked=sum(1 for job in jobs if job.check_homotopy),
            passed=passed,
        )
        logger.info(
            "Verification %s: %d pieces, %d projector cells",
            "passed" if passed else "FAILED", len(pieces), len(projectors),
        )
        return report


def verify_instance(
    instance: QInstance,
    cap: int,
    *,
    seed: int = 7,
    max_workers: int = 1,
    homotopy_sample_size: int = 200,
    margin: int = 2,
    omega: OmegaFn | None = None,
    instance_hash: str | None = None,
    max_field_degree: int | None = None,
    on_progress: ProgressFn | None = None,
) -> VerificationReport:
    verifier = InstanceVerifier(
        instance=instance,
        degree_cap=cap,
        seed=seed,
        max_workers=max_workers,
        homotopy_sample_size=homotopy_sample_size,
        margin=margin,
        omega=omega,
        instance_hash=instance_hash,
        max_field_degree=max_field_degree,
    )
    return verifier.run(on_progress)
