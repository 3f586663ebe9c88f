import random

import pytest

from hochq.algebra.group_ring import GroupRingElement
from hochq.algebra.instance import QInstance
from hochq.algebra.monomials import Monomial, WedgeIndex
from hochq.arithmetic.cyclotomic import CyclotomicNumber
from hochq.arithmetic.specialization import choose_specialization
from hochq.complexes.koszul import graded_piece_basis, omega_big
from hochq.errors import PreconditionError, StructuralError
from hochq.oracle.linalg import FieldMatrix, rank, rank_kernel
from hochq.oracle.verifier import (
    averaging_projector,
    graded_cohomology_dims,
    specialization_bound,
    verify_d_squared,
    verify_homotopy_identity,
    verify_instance,
)
from hochq.tools.instance_loader import build_instance
from hochq.tools.random_instances import random_torsion_instance


def _z(order: int, k: int) -> CyclotomicNumber:
    return CyclotomicNumber.root_power(order, k)


def test_rank_and_kernel_over_cyclotomic_field() -> None:
    matrix = FieldMatrix.from_dense([[_z(3, 0), _z(3, 1)], [_z(3, 2), _z(3, 0)]], 3)
    result = rank_kernel(matrix)
    assert result.rank == 1
    assert len(result.kernel) == 1
    assert all(value.is_zero() for value in matrix.apply(result.kernel[0]))


def test_identity_and_products() -> None:
    identity = FieldMatrix.identity(3, 5)
    assert rank(identity) == 3
    assert identity @ identity == identity
    assert rank(FieldMatrix.zeros(2, 4, 5)) == 0
    assert (identity - identity).is_zero()
    with pytest.raises(StructuralError):
        _ = identity @ FieldMatrix.zeros(2, 2, 5)


def test_matrix_entries_must_share_the_field() -> None:
    with pytest.raises(StructuralError):
        FieldMatrix(1, 1, 5, {0: {0: _z(3, 1)}})


def test_dims_on_a_piece_in_c(generic_n2: QInstance) -> None:
    s = choose_specialization(generic_n2.spec, specialization_bound(generic_n2, 4, 2))
    # gamma = (0, 0) lies in C_e: the differential vanishes on the whole piece
    assert graded_cohomology_dims(generic_n2, 0, (0, 0), s) == [1, 2, 1]
    assert graded_cohomology_dims(generic_n2, 0, (1, 1), s) == [0, 0, 0]


def test_homotopy_identity_outside_c(generic_n2: QInstance) -> None:
    s = choose_specialization(generic_n2.spec, specialization_bound(generic_n2, 4, 2))
    assert verify_homotopy_identity(generic_n2, 0, (1, 2), s).success
    assert verify_homotopy_identity(generic_n2, 0, (-1, 3), s).success
    with pytest.raises(PreconditionError):
        verify_homotopy_identity(generic_n2, 0, (0, 0), s)


def test_averaging_projector_counts_invariants(group_order2: QInstance) -> None:
    s = choose_specialization(group_order2.spec, specialization_bound(group_order2, 2, 2))
    # HH^2 in internal degree 0: 1 (x) x_0*^x_1* for e and for g, both invariant
    result = averaging_projector(group_order2, 2, 0, s)
    assert (result.rank, result.size, result.idempotent) == (2, 2, True)
    # HH^1 in degree 0 is empty; degree 1 holds x_i (x) x_i*, both invariant
    assert averaging_projector(group_order2, 1, 1, s).rank == 2


def test_d_squared_report(group_root3: QInstance) -> None:
    report = verify_d_squared(group_root3, 3)
    assert report.success
    assert report.first_failure is None
    assert report.checked > 0


@pytest.mark.parametrize("fixture", ["generic_n2", "root3_n2", "group_order2", "group_root3"])
def test_worked_instances_verify(fixture: str, request: pytest.FixtureRequest) -> None:
    instance = request.getfixturevalue(fixture)
    report = verify_instance(instance, 4, seed=7, homotopy_sample_size=50)
    assert report.passed, report.first_failure()
    assert report.homotopy_checked > 0
    assert all(p.d_squared_ok for p in report.pieces)
    assert all(p.dims_second == p.dims_oracle for p in report.pieces)


def test_report_totals_match_enumeration(generic_n2: QInstance) -> None:
    report = verify_instance(generic_n2, 4)
    # pieces within the cap hold every class with |gamma_+| <= 4
    assert report.totals() == {0: 1, 1: 2, 2: 2}


def test_random_torsion_instances_verify() -> None:
    rng = random.Random(7)
    for _ in range(6):
        model = random_torsion_instance(rng, rng.choice([2, 3]))
        instance = build_instance(model)
        report = verify_instance(instance, 3, seed=7, homotopy_sample_size=40)
        assert report.passed, (model.model_dump(), report.first_failure())


@pytest.mark.slow
def test_fifty_random_torsion_instances_at_cap_six() -> None:
    rng = random.Random(7)
    for trial in range(50):
        model = random_torsion_instance(rng, rng.choice([2, 3]))
        instance = build_instance(model)
        report = verify_instance(instance, 6, seed=trial, homotopy_sample_size=40)
        assert report.passed, (trial, model.model_dump(), report.first_failure())
        assert all(p.dims_second == p.dims_oracle for p in report.pieces)


def test_worker_count_does_not_change_the_report(group_root3: QInstance) -> None:
    sequential = verify_instance(group_root3, 3, max_workers=1)
    pooled = verify_instance(group_root3, 3, max_workers=3)
    assert sequential == pooled


def test_progress_callback(group_root3: QInstance) -> None:
    seen: list[tuple[int, int]] = []
    report = verify_instance(
        group_root3, 2, on_progress=lambda done, total: seen.append((done, total))
    )
    assert len(seen) == len(report.pieces)
    assert seen[-1] == (len(report.pieces), len(report.pieces))


def _corrupted_omega(
    instance: QInstance, g: int, alpha: Monomial, beta: WedgeIndex, i: int
) -> GroupRingElement:
    value = omega_big(instance, g, alpha, beta, i)
    return -value if i == 0 and beta.degree == 0 else value


def test_corrupted_differential_is_caught(generic_n2: QInstance) -> None:
    report = verify_instance(generic_n2, 3, omega=_corrupted_omega)
    assert not report.passed
    bad = [p for p in report.pieces if not p.match]
    assert bad
    assert any(not p.d_squared_ok for p in bad)
    assert report.first_failure() is not None

    d_squared = verify_d_squared(generic_n2, 3, omega=_corrupted_omega)
    assert not d_squared.success


def test_piece_basis_sizes_are_binomial(generic_n2: QInstance) -> None:
    assert [len(graded_piece_basis(generic_n2, 0, (2, 3), m)) for m in range(3)] == [1, 2, 1]
