import pytest

from hochq.algebra.instance import QInstance
from hochq.algebra.monomials import Monomial
from hochq.cohomology.enumeration import hh_basis
from hochq.cohomology.families import (
    FamilyParameters,
    family_parameters,
    multiplicative_order,
    two_variable_families,
)
from hochq.errors import PreconditionError


@pytest.mark.parametrize("fixture", ["generic_n2", "root3_n2", "group_order2", "group_root3"])
def test_families_match_enumeration(fixture: str, request: pytest.FixtureRequest) -> None:
    instance = request.getfixturevalue(fixture)
    for g in instance.elements:
        for m in range(3):
            assert two_variable_families(instance, g, m, 7) == hh_basis(instance, g, m, 7)


def test_parameters_for_root_of_unity_group(group_root3: QInstance) -> None:
    assert family_parameters(group_root3, 1) == FamilyParameters(ell=3, ell1=1, ell2=1)
    assert family_parameters(group_root3, group_root3.identity) == FamilyParameters(3, 0, 0)


def test_parameters_for_generic_q(generic_n2: QInstance, group_order2: QInstance) -> None:
    assert family_parameters(generic_n2, 0) == FamilyParameters(ell=0, ell1=0, ell2=0)
    # -1 is not a power of a generic parameter
    assert family_parameters(group_order2, 1) == FamilyParameters(ell=0, ell1=None, ell2=None)


def test_lowest_twisted_class(group_root3: QInstance) -> None:
    classes = two_variable_families(group_root3, 1, 0, 2)
    assert [c.alpha for c in classes] == [Monomial((1, 1))]


def test_twisted_component_at_cap_eight(group_root3: QInstance) -> None:
    def listed(m: int) -> set[tuple[tuple[int, ...], tuple[int, ...]]]:
        return {(c.alpha.exps, c.beta.bits) for c in hh_basis(group_root3, 1, m, 8)}

    # alpha = (1, 1) mod 3
    assert listed(0) == {
        ((1, 1), (0, 0)), ((1, 4), (0, 0)), ((4, 1), (0, 0)),
        ((1, 7), (0, 0)), ((7, 1), (0, 0)), ((4, 4), (0, 0)),
    }
    # alpha = (2, 1) with x_0*, alpha = (1, 2) with x_1*
    assert listed(1) == {
        ((2, 1), (1, 0)), ((2, 4), (1, 0)), ((5, 1), (1, 0)),
        ((1, 2), (0, 1)), ((1, 5), (0, 1)), ((4, 2), (0, 1)),
    }
    # gamma = (-1, -1), or alpha = (2, 2) mod 3
    assert listed(2) == {
        ((0, 0), (1, 1)), ((2, 2), (1, 1)), ((2, 5), (1, 1)), ((5, 2), (1, 1)),
    }
    assert two_variable_families(group_root3, 1, 2, 8) == hh_basis(group_root3, 1, 2, 8)


def test_multiplicative_order(root3_n2: QInstance, generic_n2: QInstance) -> None:
    assert multiplicative_order(root3_n2.qs(0, 1)) == 3
    assert multiplicative_order(generic_n2.qs(0, 1)) == 0
    assert multiplicative_order(root3_n2.spec.identity()) == 1


def test_families_need_two_variables(generic_n3: QInstance) -> None:
    with pytest.raises(PreconditionError):
        two_variable_families(generic_n3, 0, 0, 2)
