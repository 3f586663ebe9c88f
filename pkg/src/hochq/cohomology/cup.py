"""Cup products of Hochschild classes.

On basis classes the product is the free product in (A # G) (x) Lambda_{q^-1}(V*)
followed by the reduction to C_{gh}:

    ((x^a # g) (x) x*^b) u ((x^a' # h) (x) x*^b')
        = (x^a # g)(x^a' # h) (x) (x*^b ^ x*^b'),

which is zero when b and b' share an index and a coboundary when
a + a' - (b + b') falls outside C_{gh}.
"""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass
from typing import Literal

from hochq.algebra.group_ring import GroupRingElement
from hochq.algebra.instance import QInstance
from hochq.algebra.monomials import WedgeIndex, q_pi, skew_mul
from hochq.arithmetic.scalars import ScalarExponent
from hochq.cohomology.enumeration import CohomologyClass, in_C_g
from hochq.complexes.bar import permutation_sign
from hochq.complexes.koszul import CochainKey, SymbolicCochain

logger = logging.getLogger(__name__)

ZeroReason = Literal["support-overlap", "coboundary"]


@dataclass(frozen=True, slots=True)
class WedgeProduct:
    """sign * scalar * x*^result, or zero when the supports meet."""

    sign: int
    scalar: ScalarExponent
    result: WedgeIndex | None

    @property
    def is_zero(self) -> bool:
        return self.result is None


def _overlap(beta: WedgeIndex, beta2: WedgeIndex) -> bool:
    return any(a and b for a, b in zip(beta.bits, beta2.bits))


def _union(beta: WedgeIndex, beta2: WedgeIndex) -> WedgeIndex:
    return WedgeIndex(tuple(a | b for a, b in zip(beta.bits, beta2.bits)))


def wedge_mul(instance: QInstance, beta: WedgeIndex, beta2: WedgeIndex) -> WedgeProduct:
    """x*^beta ^ x*^beta2 in Lambda_{q^-1}(V*), by insertion sort.

    Moving x_a* to the right past x_b* (a > b) contributes -q(a,b)^-1.
    """
    identity = instance.spec.identity()
    if _overlap(beta, beta2):
        return WedgeProduct(1, identity, None)
    letters = [*beta.support, *beta2.support]
    sign = 1
    scalar = identity
    for p in range(1, len(letters)):
        k = p
        while k > 0 and letters[k - 1] > letters[k]:
            a, b = letters[k - 1], letters[k]
            scalar = scalar * instance.qs(b, a)
            sign = -sign
            letters[k - 1], letters[k] = b, a
            k -= 1
    return WedgeProduct(sign, scalar, _union(beta, beta2))


def wedge_mul_closed_form(instance: QInstance, beta: WedgeIndex, beta2: WedgeIndex) -> WedgeProduct:
    """Same product by pair counting: each a in beta2, b in beta with a < b gives -q(a,b)."""
    identity = instance.spec.identity()
    if _overlap(beta, beta2):
        return WedgeProduct(1, identity, None)
    sign = 1
    scalar = identity
    for a in beta2.support:
        for b in beta.support:
            if a < b:
                sign = -sign
                scalar = scalar * instance.qs(a, b)
    return WedgeProduct(sign, scalar, _union(beta, beta2))


def shuffle_coefficient(
    instance: QInstance, beta: WedgeIndex, beta2: WedgeIndex
) -> tuple[int, ScalarExponent] | None:
    """(sgn rho) * q_rho for the shuffle rho listing beta's indices before beta2's."""
    if _overlap(beta, beta2):
        return None
    joined = _union(beta, beta2).support
    size, left = len(joined), beta.degree
    target = [*beta.support, *beta2.support]
    for first in itertools.combinations(range(size), left):
        second = [p for p in range(size) if p not in first]
        rho = [*first, *second]
        if [joined[p] for p in rho] == target:
            return permutation_sign(rho), q_pi(instance, joined, rho)
    return None


@dataclass(frozen=True, slots=True)
class CupProduct:
    """sign * scalar * result, or an explicit zero carrying its reason."""

    sign: int
    scalar: ScalarExponent | None
    result: CohomologyClass | None
    reason: ZeroReason | None = None

    @property
    def is_zero(self) -> bool:
        return self.result is None


def cup(instance: QInstance, u: CohomologyClass, v: CohomologyClass) -> CupProduct:
    """The cup product of two basis classes."""
    u = CohomologyClass.checked(instance, u.key)
    v = CohomologyClass.checked(instance, v.key)
    wedge = wedge_mul(instance, u.beta, v.beta)
    if wedge.result is None:
        return CupProduct(0, None, None, "support-overlap")
    scalar, alpha, gh = skew_mul(instance, (u.alpha, u.g), (v.alpha, v.g))
    key = CochainKey(gh, alpha, wedge.result)
    if not in_C_g(instance, key.gamma, gh):
        logger.debug("Cup product of %r and %r is a coboundary", u.key, v.key)
        return CupProduct(0, None, None, "coboundary")
    return CupProduct(wedge.sign, scalar * wedge.scalar, CohomologyClass(key))


def cup_cochains(instance: QInstance, u: SymbolicCochain, v: SymbolicCochain) -> SymbolicCochain:
    """Bilinear product in (A # G) (x) Lambda_{q^-1}(V*), with no reduction to C_{gh}."""
    result = SymbolicCochain()
    for left, left_coeff in u.items():
        for right, right_coeff in v.items():
            wedge = wedge_mul(instance, left.beta, right.beta)
            if wedge.result is None:
                continue
            scalar, alpha, gh = skew_mul(instance, (left.alpha, left.g), (right.alpha, right.g))
            coeff = GroupRingElement.of(scalar * wedge.scalar, wedge.sign)
            result.add_term(CochainKey(gh, alpha, wedge.result), coeff * left_coeff * right_coeff)
    return result


def reduce_to_classes(instance: QInstance, c: SymbolicCochain) -> SymbolicCochain:
    """Drop every key whose signature lies outside C_g (those terms are coboundaries)."""
    return SymbolicCochain(
        (key, coeff) for key, coeff in c.items() if in_C_g(instance, key.gamma, key.g)
    )
