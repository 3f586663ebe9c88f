import itertools
import random

import pytest

from hochq.algebra.group_ring import GroupRingElement
from hochq.algebra.instance import QInstance
from hochq.algebra.monomials import Monomial
from hochq.complexes.bar import (
    BarTensor,
    apply_koszul_then_phi,
    bar_delta,
    permutation_sign,
    phi,
    phi_images_disjoint,
    relation_membership,
    verify_chain_map,
    verify_q_pi_peel,
)
from hochq.errors import DegreeMismatchError, PreconditionError
from hochq.main import chainmap_record
from hochq.tools.instance_loader import build_instance
from hochq.tools.random_instances import random_torsion_instance


def test_permutation_sign() -> None:
    assert permutation_sign([0, 1, 2]) == 1
    assert permutation_sign([1, 0, 2]) == -1
    assert permutation_sign([1, 2, 0]) == 1
    assert permutation_sign([0]) == 1


def test_bar_delta_squares_to_zero(generic_n3: QInstance) -> None:
    n = generic_n3.n
    x = [Monomial.unit(n, i) for i in range(n)]
    one = Monomial.one(n)
    unit = GroupRingElement.of(generic_n3.spec.identity())
    t = BarTensor([((x[2], x[1], x[0], one), unit)], arity=4)
    assert bar_delta(generic_n3, 1, bar_delta(generic_n3, 2, t)).is_zero()


def test_bar_tensor_checks_arity(generic_n2: QInstance) -> None:
    one = Monomial.one(2)
    t = BarTensor(arity=3)
    with pytest.raises(DegreeMismatchError):
        t.add_term((one, one), GroupRingElement.of(generic_n2.spec.identity()))


def test_phi_has_one_term_per_permutation(generic_n3: QInstance) -> None:
    assert len(phi(generic_n3, 3, (0, 1, 2))) == 6
    with pytest.raises(PreconditionError):
        phi(generic_n3, 2, (1, 0))


@pytest.mark.parametrize("m", [1, 2, 3])
def test_chain_map_commutes_generic(generic_n3: QInstance, m: int) -> None:
    report = verify_chain_map(generic_n3, m)
    assert report.success
    assert report.first_failure is None
    assert report.checked == len(list(itertools.combinations(range(3), m)))


def test_chain_map_commutes_on_single_tuple(generic_n3: QInstance) -> None:
    indices = (0, 2)
    assert bar_delta(generic_n3, 2, phi(generic_n3, 2, indices)) == apply_koszul_then_phi(
        generic_n3, 2, indices
    )


def test_chain_map_on_random_torsion_instances() -> None:
    rng = random.Random(7)
    for _ in range(10):
        instance = build_instance(random_torsion_instance(rng, 3, with_group=False))
        assert verify_chain_map(instance, 3).success
        assert verify_chain_map(instance, 2).success


def test_chain_map_on_random_four_variable_instances() -> None:
    rng = random.Random(11)
    for _ in range(20):
        instance = build_instance(random_torsion_instance(rng, 4, with_group=False))
        for m in range(1, 5):
            report = verify_chain_map(instance, m)
            assert report.success, (m, report.first_failure)


def test_chain_map_needs_m_at_most_n(generic_n2: QInstance) -> None:
    with pytest.raises(PreconditionError):
        verify_chain_map(generic_n2, 3)


def test_phi_images_have_disjoint_supports(generic_n3: QInstance) -> None:
    assert phi_images_disjoint(generic_n3, 2)
    assert phi_images_disjoint(generic_n3, 3)


@pytest.mark.parametrize("m,position", [(2, 0), (3, 0), (3, 1)])
def test_phi_lands_in_relation_space(generic_n3: QInstance, m: int, position: int) -> None:
    report = relation_membership(generic_n3, m, position)
    assert report.success
    assert report.checked > 0


def test_relation_membership_detects_non_relations(generic_n3: QInstance) -> None:
    one = Monomial.one(3)
    x0, x1 = Monomial.unit(3, 0), Monomial.unit(3, 1)
    unit = GroupRingElement.of(generic_n3.spec.identity())

    lone = BarTensor([((one, x0, x1, one), unit)], arity=4)
    report = relation_membership(generic_n3, 2, 0, tensors=[lone])
    assert not report.success
    assert report.first_failure is not None

    square = BarTensor([((one, x0, x0, one), unit)], arity=4)
    assert not relation_membership(generic_n3, 2, 0, tensors=[square]).success


def test_relation_membership_position_range(generic_n3: QInstance) -> None:
    with pytest.raises(PreconditionError):
        relation_membership(generic_n3, 2, 1)


def test_q_pi_peel_identities(generic_n3: QInstance) -> None:
    for i in range(3):
        assert verify_q_pi_peel(generic_n3, [0, 1, 2], i)
    rng = random.Random(13)
    for _ in range(20):
        instance = build_instance(random_torsion_instance(rng, 4, with_group=False))
        indices = sorted(rng.sample(range(4), rng.randint(1, 4)))
        assert all(verify_q_pi_peel(instance, indices, i) for i in range(len(indices))), indices


def test_chainmap_record_over_seeded_trials() -> None:
    record = chainmap_record(3, 3, 20, 7)
    assert record.success
    assert record.trials == 20
    assert [entry.position for entry in record.membership] == [0, 1]
