"""The bar resolution and the comparison map phi from the Koszul resolution.

Bar elements are restricted to tensors of normal-ordered monomials with
group-ring coefficients; general elements follow by linearity.
"""

from __future__ import annotations

import itertools
import logging
from collections import defaultdict
from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field

from sympy.combinatorics import Permutation

from hochq.algebra.group_ring import GroupRingElement, LinearCombination
from hochq.algebra.instance import QInstance
from hochq.algebra.monomials import Monomial, WedgeIndex, mono_mul, q_pi
from hochq.complexes.koszul import ResolutionElement, koszul_d
from hochq.errors import DegreeMismatchError, PreconditionError

logger = logging.getLogger(__name__)

BarKey = tuple[Monomial, ...]


class BarTensor(LinearCombination[BarKey]):
    """Element of A^{(x) arity}."""

    def __init__(self, terms: Iterable[tuple[BarKey, GroupRingElement]] = (), *,
                 arity: int = 0) -> None:
        self.arity = arity
        super().__init__(terms)

    def add_term(self, key: BarKey, coeff: GroupRingElement) -> None:
        if len(key) != self.arity:
            raise DegreeMismatchError(f"tensor of arity {len(key)} added to arity {self.arity}")
        super().add_term(key, coeff)

    def _build(self, terms: Iterable[tuple[BarKey, GroupRingElement]]) -> BarTensor:
        return BarTensor(terms, arity=self.arity)

    def middle_supports(self) -> set[BarKey]:
        return {key[1:-1] for key in self}


def bar_delta(instance: QInstance, m: int, t: BarTensor) -> BarTensor:
    """delta_m(a_0 (x) ... (x) a_{m+1}) = sum_i (-1)^i ... (x) a_i a_{i+1} (x) ..."""
    if t.arity != m + 2:
        raise DegreeMismatchError(f"delta_{m} needs arity {m + 2}, got {t.arity}")
    result = BarTensor(arity=m + 1)
    for key, coeff in t.items():
        for i in range(m + 1):
            scalar, product = mono_mul(instance, key[i], key[i + 1])
            merged = (*key[:i], product, *key[i + 2:])
            sign = -1 if i % 2 else 1
            result.add_term(merged, coeff.times_scalar(scalar) * sign)
    return result


def _check_ascending(instance: QInstance, m: int, indices: Sequence[int]) -> None:
    if len(indices) != m:
        raise PreconditionError(f"phi_{m} needs {m} indices, got {list(indices)}")
    if any(not 0 <= j < instance.n for j in indices):
        raise PreconditionError(f"index out of range in {list(indices)} for N={instance.n}")
    if any(a >= b for a, b in zip(indices, indices[1:])):
        raise PreconditionError(f"phi needs strictly ascending indices, got {list(indices)}")


def permutation_sign(perm: Sequence[int]) -> int:
    return int(Permutation(list(perm)).signature()) if len(perm) > 1 else 1


def phi(instance: QInstance, m: int, indices: Sequence[int]) -> BarTensor:
    """phi_m(1 (x) 1 (x) x_{j_1}^...^x_{j_m}) = sum_pi sgn(pi) q_pi 1 (x) x_{j_pi(1)} ... (x) 1."""
    _check_ascending(instance, m, indices)
    n = instance.n
    one = Monomial.one(n)
    result = BarTensor(arity=m + 2)
    for perm in itertools.permutations(range(m)):
        scalar = q_pi(instance, indices, perm)
        middle = tuple(Monomial.unit(n, indices[p]) for p in perm)
        result.add_term((one, *middle, one), GroupRingElement.of(scalar, permutation_sign(perm)))
    return result


def phi_extended(instance: QInstance, m: int, element: ResolutionElement) -> BarTensor:
    """A^e-linear extension of phi_m: outer factors multiply the first and last slots."""
    result = BarTensor(arity=m + 2)
    for (u, v, wedge), coeff in element.items():
        if wedge.degree != m:
            raise DegreeMismatchError(f"phi_{m} got a wedge of degree {wedge.degree}")
        for key, inner in phi(instance, m, wedge.support).items():
            left_s, first = mono_mul(instance, u, key[0])
            right_s, last = mono_mul(instance, key[-1], v)
            new_key = (first, *key[1:-1], last)
            result.add_term(new_key, inner.times_scalar(left_s * right_s) * coeff)
    return result


def apply_koszul_then_phi(instance: QInstance, m: int, indices: Sequence[int]) -> BarTensor:
    """phi_{m-1}(d_m(1 (x) 1 (x) x_{j_1} ^ ... ^ x_{j_m}))."""
    _check_ascending(instance, m, indices)
    beta = WedgeIndex.from_support(instance.n, indices)
    return phi_extended(instance, m - 1, koszul_d(instance, m, beta))


@dataclass(frozen=True)
class ChainMapReport:
    """Outcome of comparing delta_m phi_m with phi_{m-1} d_m on every index tuple."""

    m: int
    n: int
    checked: int
    success: bool
    failures: list[tuple[int, ...]] = field(default_factory=list)

    @property
    def first_failure(self) -> tuple[int, ...] | None:
        return self.failures[0] if self.failures else None


def verify_chain_map(instance: QInstance, m: int) -> ChainMapReport:
    """Check the commuting square for every ascending tuple of m indices."""
    if not 1 <= m <= instance.n:
        raise PreconditionError(f"chain-map check needs 1 <= m <= N, got m={m}, N={instance.n}")
    failures: list[tuple[int, ...]] = []
    checked = 0
    for indices in itertools.combinations(range(instance.n), m):
        checked += 1
        lhs = bar_delta(instance, m, phi(instance, m, indices))
        rhs = apply_koszul_then_phi(instance, m, indices)
        if lhs != rhs:
            failures.append(indices)
    if failures:
        logger.warning("Chain map fails on %d of %d tuples (m=%d)", len(failures), checked, m)
    return ChainMapReport(m=m, n=instance.n, checked=checked, success=not failures,
                          failures=failures)


def phi_images_disjoint(instance: QInstance, m: int) -> bool:
    """Distinct wedge inputs give phi images with disjoint middle supports."""
    seen: set[BarKey] = set()
    for indices in itertools.combinations(range(instance.n), m):
        supports = phi(instance, m, indices).middle_supports()
        if seen & supports:
            return False
        seen |= supports
    return True


@dataclass(frozen=True)
class MembershipReport:
    m: int
    position: int
    checked: int
    success: bool
    first_failure: str | None = None


def relation_membership(
    instance: QInstance, m: int, position: int, *, tensors: Sequence[BarTensor] | None = None
) -> MembershipReport:
    """Check that phi_m lands in A (x) V^{(x) i} (x) R (x) V^{(x) m-i-2} (x) A.

    R is spanned by x_a (x) x_b - q(a,b) x_b (x) x_a. `tensors` overrides the phi
    images under test.
    """
    if not 0 <= position <= m - 2:
        raise PreconditionError(f"position must lie in [0, {m - 2}], got {position}")
    if tensors is None:
        tensors = [phi(instance, m, idx) for idx in itertools.combinations(range(instance.n), m)]
    checked = 0
    for tensor in tensors:
        groups: dict[BarKey, dict[tuple[int, int], GroupRingElement]] = defaultdict(dict)
        for key, coeff in tensor.items():
            pair = key[position + 1], key[position + 2]
            a, b = _single_letter(pair[0]), _single_letter(pair[1])
            if a is None or b is None:
                return MembershipReport(m, position, checked, False,
                                        f"{key!r}: non-linear factor in the relation slot")
            rest = (*key[: position + 1], *key[position + 3:])
            groups[rest][(a, b)] = coeff
        for rest, component in groups.items():
            checked += 1
            failure = _component_failure(instance, component)
            if failure:
                return MembershipReport(m, position, checked, False, f"{rest!r}: {failure}")
    return MembershipReport(m, position, checked, True)


def _single_letter(mono: Monomial) -> int | None:
    if mono.degree != 1:
        return None
    return mono.exps.index(1)


def _component_failure(
    instance: QInstance, component: dict[tuple[int, int], GroupRingElement]
) -> str | None:
    zero = GroupRingElement()
    for (a, b), coeff in component.items():
        if a == b and not coeff.is_zero():
            return f"diagonal term x_{a} (x) x_{a}"
    for (a, b) in component:
        if a > b:
            a, b = b, a
        forward = component.get((a, b), zero)
        backward = component.get((b, a), zero)
        if backward != -forward.times_scalar(instance.qs(a, b)):
            return f"pair ({a}, {b}) is not a multiple of the relation"
    return None


def verify_q_pi_peel(instance: QInstance, indices: Sequence[int], i: int) -> bool:
    """Peeling j_i off the front or back of a permuted word factors q_pi.

    Front: q_pi = (prod_{s<=i} q(j_s, j_i)) q_pi'.  Back: q_pi = (prod_{s>=i} q(j_i, j_s)) q_pi'.
    """
    m = len(indices)
    if not 0 <= i < m:
        raise PreconditionError(f"position {i} out of range for {m} indices")
    rest_positions = [p for p in range(m) if p != i]
    rest = [indices[p] for p in rest_positions]
    front = instance.spec.identity()
    for s in range(i + 1):
        front = front * instance.qs(indices[s], indices[i])
    back = instance.spec.identity()
    for s in range(i, m):
        back = back * instance.qs(indices[i], indices[s])
    for sub in itertools.permutations(range(m - 1)):
        reduced = q_pi(instance, rest, sub)
        lifted = [rest_positions[p] for p in sub]
        if q_pi(instance, indices, [i, *lifted]) != front * reduced:
            return False
        if q_pi(instance, indices, [*lifted, i]) != back * reduced:
            return False
    return True
