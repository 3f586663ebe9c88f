import pytest

from hochq.algebra.instance import QInstance
from hochq.algebra.monomials import Monomial, WedgeIndex
from hochq.cohomology.enumeration import (
    CohomologyClass,
    center_basis,
    degree_totals,
    gamma_signatures,
    hh_basis,
    hh_dim_table,
    in_C_g,
    invariant_basis,
    is_invariant,
    monomials_up_to,
    skew_center_basis,
)
from hochq.complexes.koszul import CochainKey
from hochq.errors import PreconditionError, StructuralError


def _key(g: int, alpha: tuple[int, ...], beta: tuple[int, ...]) -> CochainKey:
    return CochainKey(g, Monomial(alpha), WedgeIndex(beta))


def test_generic_two_variable_totals(generic_n2: QInstance) -> None:
    table = hh_dim_table(generic_n2, 8)
    assert [table.total(m) for m in range(3)] == [1, 2, 2]


def test_generic_two_variable_basis(generic_n2: QInstance) -> None:
    assert [c.key for c in hh_basis(generic_n2, 0, 0, 8)] == [_key(0, (0, 0), (0, 0))]
    assert [c.key for c in hh_basis(generic_n2, 0, 1, 8)] == [
        _key(0, (0, 1), (0, 1)),
        _key(0, (1, 0), (1, 0)),
    ]
    assert [c.key for c in hh_basis(generic_n2, 0, 2, 8)] == [
        _key(0, (0, 0), (1, 1)),
        _key(0, (1, 1), (1, 1)),
    ]


def test_root_of_unity_hh0(root3_n2: QInstance) -> None:
    classes = hh_basis(root3_n2, 0, 0, 12)
    assert len(classes) == 15
    assert all(c.alpha.exps[0] % 3 == 0 and c.alpha.exps[1] % 3 == 0 for c in classes)


def test_hh0_is_the_center(root3_n2: QInstance) -> None:
    from_classes = [c.alpha for c in hh_basis(root3_n2, root3_n2.identity, 0, 9)]
    assert from_classes == center_basis(root3_n2, 9)


def test_sign_group_components(group_order2: QInstance) -> None:
    table = hh_dim_table(group_order2, 2)
    g = 1
    assert [table.total(m, g) for m in range(3)] == [0, 0, 1]
    assert [c.key for c in hh_basis(group_order2, g, 2, 2)] == [_key(g, (0, 0), (1, 1))]


def test_sign_group_invariants(group_order2: QInstance) -> None:
    invariant = invariant_basis(group_order2, 2, 2)
    assert len(invariant) == 3
    assert {c.g for c in invariant} == {0, 1}
    table = hh_dim_table(group_order2, 2)
    assert table.invariant_total(2) == 3
    assert degree_totals(table).invariant == {0: 1, 1: 2, 2: 3}


def test_non_invariant_class_is_filtered(group_order2: QInstance) -> None:
    # g rescales by lambda_g^gamma; gamma = (-1, 0) picks up a single -1
    assert is_invariant(group_order2, _key(0, (1, 0), (1, 0)))
    assert not is_invariant(group_order2, _key(0, (0, 0), (1, 0)))


def test_skew_center_with_sign_group(group_order2: QInstance) -> None:
    assert skew_center_basis(group_order2, 0) == [(Monomial((0, 0)), group_order2.identity)]
    assert skew_center_basis(group_order2, 4) == [
        (c.alpha, c.g) for c in invariant_basis(group_order2, 0, 4)
    ]


def test_skew_center_equals_invariant_hh0(group_root3: QInstance) -> None:
    expected = [(c.alpha, c.g) for c in invariant_basis(group_root3, 0, 6)]
    assert sorted(skew_center_basis(group_root3, 6)) == sorted(expected)


def test_skew_center_with_trivial_group_is_the_center(root3_n2: QInstance) -> None:
    assert skew_center_basis(root3_n2, 6) == [
        (alpha, root3_n2.identity) for alpha in center_basis(root3_n2, 6)
    ]


def test_group_root3_lowest_twisted_class(group_root3: QInstance) -> None:
    g = 1
    classes = hh_basis(group_root3, g, 0, 8)
    lowest = min(classes, key=lambda c: (c.alpha.degree, c.alpha))
    assert lowest.alpha == Monomial((1, 1))


def test_table_rows_are_sorted_and_complete(group_root3: QInstance) -> None:
    table = hh_dim_table(group_root3, 3)
    rows = table.rows()
    assert rows == sorted(rows)
    assert len(rows) == 3 * 3 * 4
    for g, m, d, dim, inv in rows:
        assert dim == table.dim(g, m, d)
        assert inv == table.invariant_dim(m, d)


def test_checked_class_rejects_coboundary(generic_n2: QInstance) -> None:
    with pytest.raises(PreconditionError):
        CohomologyClass.checked(generic_n2, _key(0, (1, 1), (0, 0)))


def test_enumeration_helpers() -> None:
    assert len(list(monomials_up_to(2, 2))) == 6
    gammas = list(gamma_signatures(2, 1))
    assert (-1, -1) in gammas
    assert (1, 1) not in gammas
    assert len(gammas) == 8


def test_unknown_group_element(generic_n2: QInstance) -> None:
    with pytest.raises(StructuralError):
        in_C_g(generic_n2, (0, 0), 5)
    with pytest.raises(PreconditionError):
        hh_basis(generic_n2, 0, 0, -1)
