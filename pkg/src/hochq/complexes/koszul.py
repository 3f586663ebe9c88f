"""The dualized twisted Koszul complex with coefficients in A # G.

A cochain basis element is (x^alpha # g) (x) (x*)^{wedge beta}; its grading
signature gamma = alpha - beta is preserved by the differential, so the complex
splits into finite pieces K_{g,gamma}. Two forms of the differential are
provided: the closed form through Omega_g, and the form that multiplies out the
bimodule action directly. They must agree term by term.
"""

from __future__ import annotations

import itertools
import logging
from collections.abc import Callable, Iterable, Mapping
from dataclasses import dataclass

from hochq.algebra.group_ring import GroupRingElement, LinearCombination
from hochq.algebra.instance import QInstance
from hochq.algebra.monomials import Monomial, WedgeIndex, mono_mul
from hochq.arithmetic.cyclotomic import CyclotomicNumber
from hochq.arithmetic.scalars import ScalarExponent
from hochq.arithmetic.specialization import Specialization
from hochq.errors import DegreeMismatchError, PreconditionError, StructuralError

logger = logging.getLogger(__name__)

Gamma = tuple[int, ...]


@dataclass(frozen=True, slots=True, order=True)
class CochainKey:
    """(x^alpha # g) (x) (x*)^{wedge beta}."""

    g: int
    alpha: Monomial
    beta: WedgeIndex

    def __post_init__(self) -> None:
        if self.alpha.n != self.beta.n:
            raise StructuralError(
                f"alpha has {self.alpha.n} entries but beta has {self.beta.n}"
            )

    @property
    def degree(self) -> int:
        return self.beta.degree

    @property
    def internal_degree(self) -> int:
        return self.alpha.degree

    @property
    def gamma(self) -> Gamma:
        return tuple(a - b for a, b in zip(self.alpha.exps, self.beta.bits))


class SymbolicCochain(LinearCombination[CochainKey]):
    """A cochain with group-ring coefficients."""

    def degrees(self) -> set[int]:
        return {key.degree for key in self}


def basis_cochain(instance: QInstance, key: CochainKey) -> SymbolicCochain:
    return SymbolicCochain([(key, GroupRingElement.of(instance.spec.identity()))])


FieldCochain = dict[CochainKey, CyclotomicNumber]


# -- scalars of the closed form ---------------------------------------------


def row_product(instance: QInstance, i: int, gamma: Gamma, *, start: int = 0,
                stop: int | None = None, transpose: bool = False) -> ScalarExponent:
    """prod_{start <= s < stop} q(i,s)^gamma_s, or q(s,i)^gamma_s when transposed."""
    stop = instance.n if stop is None else stop
    scalar = instance.spec.identity()
    for s in range(start, stop):
        if gamma[s]:
            entry = instance.qs(s, i) if transpose else instance.qs(i, s)
            scalar = scalar * entry ** gamma[s]
    return scalar


def condition_holds(instance: QInstance, g: int, gamma: Gamma, i: int) -> bool:
    """prod_s q(i,s)^gamma_s == lambda_{g,i}."""
    return (row_product(instance, i, gamma) / instance.lam(g, i)).is_one()


def gamma_norm(instance: QInstance, g: int, gamma: Gamma) -> int:
    """#{i : gamma_i != -1 and the condition at i fails}."""
    return sum(
        1
        for i in range(instance.n)
        if gamma[i] != -1 and not condition_holds(instance, g, gamma, i)
    )


@dataclass(frozen=True, slots=True)
class GradedSignature:
    gamma: Gamma
    norm: int

    @classmethod
    def compute(cls, instance: QInstance, g: int, gamma: Gamma) -> GradedSignature:
        if len(gamma) != instance.n or any(c < -1 for c in gamma):
            raise StructuralError(f"invalid grading signature {gamma}")
        return cls(tuple(gamma), gamma_norm(instance, g, gamma))

    @property
    def in_c(self) -> bool:
        return self.norm == 0


def epsilon(beta: WedgeIndex, i: int) -> int:
    """(-1)^(beta_0 + ... + beta_i)."""
    return -1 if sum(beta.bits[: i + 1]) % 2 else 1


OmegaFn = Callable[[QInstance, int, Monomial, WedgeIndex, int], GroupRingElement]


def omega_big(
    instance: QInstance, g: int, alpha: Monomial, beta: WedgeIndex, i: int
) -> GroupRingElement:
    """Coefficient of the i-th term of d* on (x^alpha # g) (x) (x*)^{wedge beta}."""
    if beta.bits[i] == 1:
        return GroupRingElement()
    gamma = tuple(a - b for a, b in zip(alpha.exps, beta.bits))
    if condition_holds(instance, g, gamma, i):
        return GroupRingElement()
    left = row_product(instance, i, gamma, stop=i + 1)
    right = instance.lam(g, i) * row_product(instance, i, gamma, start=i, transpose=True)
    value = GroupRingElement.of(left) - GroupRingElement.of(right)
    return value * epsilon(beta, i)


def _check_degree(m: int, c: LinearCombination[CochainKey]) -> None:
    for key in c:
        if key.degree != m - 1:
            raise DegreeMismatchError(
                f"d*_{m} expects cochains of degree {m - 1}, got {key!r} of degree {key.degree}"
            )


def d_star(
    instance: QInstance, m: int, c: SymbolicCochain, *, omega: OmegaFn | None = None
) -> SymbolicCochain:
    """d*_m via Omega_g: degree m-1 cochains to degree m cochains.

    `omega` replaces `omega_big` (used to inject faults in negative controls).
    """
    _check_degree(m, c)
    omega_fn = omega or omega_big
    result = SymbolicCochain()
    for key, coeff in c.items():
        for i in range(instance.n):
            if key.beta.bits[i]:
                continue
            factor = omega_fn(instance, key.g, key.alpha, key.beta, i)
            if factor.is_zero():
                continue
            target = CochainKey(key.g, key.alpha.shifted(i, 1), key.beta.with_bit(i, 1))
            result.add_term(target, factor * coeff)
    return result


def d_star_module_action(instance: QInstance, m: int, c: SymbolicCochain) -> SymbolicCochain:
    """d*_m by composing with the resolution differential and multiplying out.

    The term for i reads  sign * [ (prod_{s<=i} q(s,i)^beta'_s) x_i a
    - (prod_{s>=i} q(i,s)^beta'_s) a (^g x_i) ] # g  with beta' = beta + [i].
    """
    _check_degree(m, c)
    n = instance.n
    result = SymbolicCochain()
    for key, coeff in c.items():
        for i in range(n):
            if key.beta.bits[i]:
                continue
            target_beta = key.beta.with_bit(i, 1)
            sign = -1 if sum(target_beta.bits[:i]) % 2 else 1
            unit = Monomial.unit(n, i)
            left_q = _beta_product(instance, target_beta, i, below=True)
            right_q = _beta_product(instance, target_beta, i, below=False)
            left_s, product = mono_mul(instance, unit, key.alpha)
            right_s, _ = mono_mul(instance, key.alpha, unit)
            value = GroupRingElement.of(left_q * left_s) - GroupRingElement.of(
                right_q * instance.lam(key.g, i) * right_s
            )
            if value.is_zero():
                continue
            result.add_term(CochainKey(key.g, product, target_beta), value * sign * coeff)
    return result


def _beta_product(instance: QInstance, beta: WedgeIndex, i: int, *, below: bool) -> ScalarExponent:
    scalar = instance.spec.identity()
    indices = range(0, i + 1) if below else range(i, instance.n)
    for s in indices:
        if beta.bits[s]:
            scalar = scalar * (instance.qs(s, i) if below else instance.qs(i, s))
    return scalar


# -- graded pieces and the contracting homotopy -----------------------------


def graded_piece_basis(instance: QInstance, g: int, gamma: Gamma, m: int) -> list[CochainKey]:
    """Basis of K_{g,gamma}^m: beta forced to 1 where gamma_i = -1, alpha = gamma + beta."""
    n = instance.n
    forced = [i for i in range(n) if gamma[i] == -1]
    optional = [i for i in range(n) if gamma[i] != -1]
    extra = m - len(forced)
    if extra < 0 or extra > len(optional):
        return []
    keys = []
    for chosen in itertools.combinations(optional, extra):
        bits = [0] * n
        for i in (*forced, *chosen):
            bits[i] = 1
        alpha = Monomial(tuple(c + b for c, b in zip(gamma, bits)))
        keys.append(CochainKey(g, alpha, WedgeIndex(tuple(bits))))
    return sorted(keys)


def omega_small(
    instance: QInstance, g: int, alpha: Monomial, beta: WedgeIndex, i: int, s: Specialization
) -> CyclotomicNumber:
    """omega_g(alpha, beta, i) in the field: Omega_g(alpha-[i], beta-[i], i)^-1, or 0."""
    if alpha.exps[i] == 0 or beta.bits[i] == 0:
        return CyclotomicNumber.zero(s.target_order)
    lowered_alpha = alpha.shifted(i, -1)
    lowered_beta = beta.with_bit(i, 0)
    value = omega_big(instance, g, lowered_alpha, lowered_beta, i)
    if value.is_zero():
        return CyclotomicNumber.zero(s.target_order)
    return value.specialize(s).inverse()


def homotopy_h(
    instance: QInstance,
    g: int,
    gamma: Gamma,
    m: int,
    c: Mapping[CochainKey, CyclotomicNumber],
    s: Specialization,
) -> FieldCochain:
    """h_m: K_{g,gamma}^m -> K_{g,gamma}^{m-1}, scaled by 1/||gamma||_g."""
    norm = gamma_norm(instance, g, gamma)
    if norm == 0:
        raise PreconditionError(f"gamma={gamma} lies in C_g for g={g}; no homotopy exists")
    scale = CyclotomicNumber.from_rational(s.target_order, norm).inverse()
    result: FieldCochain = {}
    for key, value in c.items():
        if key.degree != m:
            raise DegreeMismatchError(f"h_{m} got {key!r} of degree {key.degree}")
        if key.g != g or key.gamma != tuple(gamma):
            raise PreconditionError(f"{key!r} is not in K_(g={g}, gamma={gamma})")
        for i in range(instance.n):
            w = omega_small(instance, g, key.alpha, key.beta, i, s)
            if w.is_zero():
                continue
            target = CochainKey(g, key.alpha.shifted(i, -1), key.beta.with_bit(i, 0))
            term = w * value * scale
            current = result.get(target)
            result[target] = term if current is None else current + term
    return {k: v for k, v in result.items() if not v.is_zero()}


def d_star_field(
    instance: QInstance, m: int, c: Mapping[CochainKey, CyclotomicNumber], s: Specialization
) -> FieldCochain:
    """d*_m applied to a field-valued cochain."""
    result: FieldCochain = {}
    for key, value in c.items():
        if key.degree != m - 1:
            raise DegreeMismatchError(f"d*_{m} got {key!r} of degree {key.degree}")
        for i in range(instance.n):
            factor = omega_big(instance, key.g, key.alpha, key.beta, i)
            if factor.is_zero():
                continue
            target = CochainKey(key.g, key.alpha.shifted(i, 1), key.beta.with_bit(i, 1))
            term = factor.specialize(s) * value
            current = result.get(target)
            result[target] = term if current is None else current + term
    return {k: v for k, v in result.items() if not v.is_zero()}


# -- the resolution differential --------------------------------------------

ResolutionKey = tuple[Monomial, Monomial, WedgeIndex]


class ResolutionElement(LinearCombination[ResolutionKey]):
    """Element of A^e (x) Lambda(V): key (left factor, right factor, wedge)."""


def koszul_d(instance: QInstance, m: int, beta: WedgeIndex) -> ResolutionElement:
    """d_m(1 (x) 1 (x) x^{wedge beta})."""
    if beta.degree != m or m < 1:
        raise DegreeMismatchError(f"d_{m} needs |beta| = {m} >= 1, got {beta!r}")
    n = instance.n
    one = Monomial.one(n)
    result = ResolutionElement()
    for i in range(n):
        if not beta.bits[i]:
            continue
        sign = -1 if sum(beta.bits[:i]) % 2 else 1
        lower = beta.with_bit(i, 0)
        unit = Monomial.unit(n, i)
        left_q = _beta_product(instance, beta, i, below=True)
        right_q = _beta_product(instance, beta, i, below=False)
        result.add_term((unit, one, lower), GroupRingElement.of(left_q) * sign)
        result.add_term((one, unit, lower), GroupRingElement.of(right_q) * -sign)
    return result


def resolution_d(instance: QInstance, m: int, element: ResolutionElement) -> ResolutionElement:
    """A^e-linear extension: d(u (x) v (x) w) = u . d(1 (x) 1 (x) w) . v."""
    result = ResolutionElement()
    for (u, v, wedge), coeff in element.items():
        for (a, b, lower), inner in koszul_d(instance, m, wedge).items():
            left_s, left = mono_mul(instance, u, a)
            right_s, right = mono_mul(instance, b, v)
            result.add_term(
                (left, right, lower), inner.times_scalar(left_s * right_s) * coeff
            )
    return result


def resolution_basis(instance: QInstance, beta: WedgeIndex) -> ResolutionElement:
    one = Monomial.one(instance.n)
    return ResolutionElement([((one, one, beta), GroupRingElement.of(instance.spec.identity()))])


def apply_d_star_twice(instance: QInstance, key: CochainKey) -> SymbolicCochain:
    """d*_{m+2} d*_{m+1} on one basis key; zero for a complex."""
    m = key.degree
    once = d_star(instance, m + 1, basis_cochain(instance, key))
    return d_star(instance, m + 2, once)


def all_wedges(n: int, m: int) -> Iterable[WedgeIndex]:
    for support in itertools.combinations(range(n), m):
        yield WedgeIndex.from_support(n, support)
