import random

import pytest

from hochq.algebra.instance import QInstance
from hochq.algebra.monomials import Monomial, WedgeIndex
from hochq.arithmetic.cyclotomic import CyclotomicNumber
from hochq.arithmetic.specialization import choose_specialization
from hochq.cohomology.enumeration import gamma_signatures, in_C_g
from hochq.complexes.koszul import (
    CochainKey,
    GradedSignature,
    ResolutionElement,
    SymbolicCochain,
    apply_d_star_twice,
    basis_cochain,
    d_star,
    d_star_field,
    d_star_module_action,
    epsilon,
    graded_piece_basis,
    homotopy_h,
    koszul_d,
    omega_big,
    resolution_basis,
    resolution_d,
)
from hochq.errors import DegreeMismatchError, PreconditionError, StructuralError
from hochq.oracle.verifier import specialization_bound


def _random_key(rng: random.Random, instance: QInstance, cap: int = 3) -> CochainKey:
    n = instance.n
    alpha = Monomial(tuple(rng.randint(0, cap) for _ in range(n)))
    beta = WedgeIndex(tuple(rng.randint(0, 1) for _ in range(n)))
    return CochainKey(rng.choice(list(instance.elements)), alpha, beta)


def test_epsilon_counts_through_i() -> None:
    beta = WedgeIndex((1, 0, 1))
    assert epsilon(beta, 0) == -1
    assert epsilon(beta, 1) == -1
    assert epsilon(beta, 2) == 1


def test_omega_vanishes_on_occupied_index(generic_n2: QInstance) -> None:
    value = omega_big(generic_n2, 0, Monomial((1, 1)), WedgeIndex((1, 0)), 0)
    assert value.is_zero()


def test_omega_vanishes_when_condition_holds(generic_n2: QInstance) -> None:
    # gamma = (1, 0): the i = 0 product is q(0,1)^0 = 1 = lambda_{e,0}
    assert omega_big(generic_n2, 0, Monomial((1, 0)), WedgeIndex((0, 0)), 0).is_zero()
    assert not omega_big(generic_n2, 0, Monomial((0, 1)), WedgeIndex((0, 0)), 0).is_zero()


@pytest.mark.parametrize("fixture", ["generic_n2", "group_order2", "group_root3", "generic_n3"])
def test_d_star_squares_to_zero(fixture: str, request: pytest.FixtureRequest) -> None:
    instance = request.getfixturevalue(fixture)
    rng = random.Random(17)
    checked = 0
    while checked < 1000:
        key = _random_key(rng, instance, cap=6)
        if key.degree > instance.n - 2:
            continue
        assert apply_d_star_twice(instance, key).is_zero(), key
        checked += 1


@pytest.mark.parametrize("fixture", ["generic_n2", "group_order2", "group_root3", "generic_n3"])
def test_closed_form_matches_module_action(fixture: str, request: pytest.FixtureRequest) -> None:
    instance = request.getfixturevalue(fixture)
    rng = random.Random(23)
    for _ in range(60):
        key = _random_key(rng, instance)
        if key.degree >= instance.n:
            continue
        c = basis_cochain(instance, key)
        m = key.degree + 1
        assert d_star(instance, m, c) == d_star_module_action(instance, m, c)


def test_d_star_preserves_the_grading(generic_n3: QInstance) -> None:
    rng = random.Random(31)
    for _ in range(40):
        key = _random_key(rng, generic_n3)
        if key.degree >= 3:
            continue
        for target in d_star(generic_n3, key.degree + 1, basis_cochain(generic_n3, key)):
            assert target.gamma == key.gamma
            assert target.g == key.g


def test_d_star_rejects_wrong_degree(generic_n2: QInstance) -> None:
    key = CochainKey(0, Monomial((1, 1)), WedgeIndex((1, 0)))
    with pytest.raises(DegreeMismatchError):
        d_star(generic_n2, 1, basis_cochain(generic_n2, key))


def test_graded_signature_rejects_bad_entries(generic_n2: QInstance) -> None:
    with pytest.raises(StructuralError):
        GradedSignature.compute(generic_n2, 0, (-2, 0))
    assert GradedSignature.compute(generic_n2, 0, (0, 0)).in_c
    assert GradedSignature.compute(generic_n2, 0, (1, 1)).norm == 2


def test_piece_basis_forces_minus_one_entries(generic_n2: QInstance) -> None:
    keys = graded_piece_basis(generic_n2, 0, (-1, 2), 1)
    assert keys == [CochainKey(0, Monomial((0, 2)), WedgeIndex((1, 0)))]
    assert graded_piece_basis(generic_n2, 0, (-1, 2), 0) == []
    assert len(graded_piece_basis(generic_n2, 0, (1, 2), 1)) == 2


@pytest.mark.parametrize(("fixture", "cap"), [("group_root3", 10), ("generic_n2", 18)])
def test_homotopy_identity_on_random_pieces(
    fixture: str, cap: int, request: pytest.FixtureRequest
) -> None:
    """h d* + d* h = id on pieces outside C_g."""
    instance = request.getfixturevalue(fixture)
    s = choose_specialization(instance.spec, specialization_bound(instance, cap, 2))
    rng = random.Random(41)
    pieces = [
        (g, gamma)
        for g in instance.elements
        for gamma in gamma_signatures(instance.n, cap)
        if not in_C_g(instance, gamma, g)
    ]
    assert len(pieces) >= 200
    one = CyclotomicNumber.one(s.target_order)
    for g, gamma in rng.sample(pieces, 200):
        for m in range(3):
            for key in graded_piece_basis(instance, g, gamma, m):
                c = {key: one}
                total: dict[CochainKey, CyclotomicNumber] = {}
                if m < 2:
                    up = d_star_field(instance, m + 1, c, s)
                    total.update(homotopy_h(instance, g, gamma, m + 1, up, s))
                if m > 0:
                    down = homotopy_h(instance, g, gamma, m, c, s)
                    for k, v in d_star_field(instance, m, down, s).items():
                        total[k] = total[k] + v if k in total else v
                total = {k: v for k, v in total.items() if not v.is_zero()}
                assert total == c


def test_homotopy_refuses_pieces_in_c(generic_n2: QInstance) -> None:
    s = choose_specialization(generic_n2.spec, 8)
    with pytest.raises(PreconditionError):
        homotopy_h(generic_n2, 0, (0, 0), 0, {}, s)


def test_resolution_differential_squares_to_zero(generic_n3: QInstance) -> None:
    for support in [(0, 1), (0, 2), (1, 2), (0, 1, 2)]:
        beta = WedgeIndex.from_support(3, support)
        m = beta.degree
        once = resolution_d(generic_n3, m, resolution_basis(generic_n3, beta))
        assert resolution_d(generic_n3, m - 1, once).is_zero()


def test_koszul_d_on_a_single_generator(generic_n2: QInstance) -> None:
    d1 = koszul_d(generic_n2, 1, WedgeIndex((1, 0)))
    assert isinstance(d1, ResolutionElement)
    assert len(d1) == 2
    with pytest.raises(DegreeMismatchError):
        koszul_d(generic_n2, 2, WedgeIndex((1, 0)))


def test_symbolic_cochain_module_operations(generic_n2: QInstance) -> None:
    key = CochainKey(0, Monomial((0, 1)), WedgeIndex((0, 0)))
    c = basis_cochain(generic_n2, key)
    assert isinstance(c + c, SymbolicCochain)
    assert (c - c).is_zero()
    assert c.degrees() == {0}
