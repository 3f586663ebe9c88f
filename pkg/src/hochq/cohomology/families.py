"""Congruence description of HH^m_g for two variables.

With N = 2 and q = q(0,1), the condition alpha - beta in C_g reads

    (gamma_0 = -1  or  q^gamma_1 = lambda_{g,0})  and
    (gamma_1 = -1  or  q^-gamma_0 = lambda_{g,1}).

When q has finite order l and lambda_{g,0} = q^l1, lambda_{g,1} = q^-l2, this is
gamma_1 = l1 (mod l) and gamma_0 = l2 (mod l); for q of infinite order the
congruences become equalities.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from hochq.algebra.instance import QInstance
from hochq.arithmetic.scalars import ScalarExponent
from hochq.cohomology.enumeration import CohomologyClass, monomials_up_to
from hochq.complexes.koszul import CochainKey, all_wedges
from hochq.errors import PreconditionError


@dataclass(frozen=True, slots=True)
class FamilyParameters:
    """l = order of q (0 when infinite); l1, l2 as above, None when no such power exists."""

    ell: int
    ell1: int | None
    ell2: int | None


def multiplicative_order(e: ScalarExponent) -> int:
    """Order of a scalar; 0 for infinite order."""
    if any(e.free):
        return 0
    return e.order // math.gcd(e.torsion, e.order)


def _discrete_log(base: ScalarExponent, target: ScalarExponent, ell: int) -> int | None:
    """Least k >= 0 with base^k = target (searching one period), else None."""
    if ell == 0:
        return 0 if target.is_one() else None
    power = base ** 0
    for k in range(ell):
        if power == target:
            return k
        power = power * base
    return None


def family_parameters(instance: QInstance, g: int) -> FamilyParameters:
    if instance.n != 2:
        raise PreconditionError(f"two-variable families need N = 2, got N = {instance.n}")
    instance.check_element(g)
    q = instance.qs(0, 1)
    ell = multiplicative_order(q)
    ell1 = _discrete_log(q, instance.lam(g, 0), ell)
    ell2 = _discrete_log(q, instance.lam(g, 1).inverse(), ell)
    return FamilyParameters(ell=ell, ell1=ell1, ell2=ell2)


def _congruent(value: int, residue: int | None, ell: int) -> bool:
    if residue is None:
        return False
    if ell == 0:
        return value == residue
    return (value - residue) % ell == 0


def two_variable_families(
    instance: QInstance, g: int, m: int, cap: int
) -> list[CohomologyClass]:
    """HH^m_g for N = 2 with |alpha| <= cap, from the congruence description."""
    params = family_parameters(instance, g)
    classes = []
    wedges = list(all_wedges(2, m)) if 0 <= m <= 2 else []
    for alpha in monomials_up_to(2, cap):
        for beta in wedges:
            g0 = alpha.exps[0] - beta.bits[0]
            g1 = alpha.exps[1] - beta.bits[1]
            first = g0 == -1 or _congruent(g1, params.ell1, params.ell)
            second = g1 == -1 or _congruent(g0, params.ell2, params.ell)
            if first and second:
                classes.append(CohomologyClass(CochainKey(g, alpha, beta)))
    return sorted(classes)
