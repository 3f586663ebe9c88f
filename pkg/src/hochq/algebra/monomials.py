"""Monomials of S_q(V), wedge indices, and the rewriting scalars.

Indices are 0-based throughout: generator x_i is index i, and q(i, j) is the
scalar in x_i x_j = q(i, j) x_j x_i.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass

from hochq.algebra.instance import QInstance
from hochq.arithmetic.scalars import ScalarExponent
from hochq.errors import PreconditionError, StructuralError


@dataclass(frozen=True, slots=True, order=True)
class Monomial:
    """x^alpha = x_0^{alpha_0} ... x_{N-1}^{alpha_{N-1}}."""

    exps: tuple[int, ...]

    def __post_init__(self) -> None:
        if any(a < 0 for a in self.exps):
            raise StructuralError(f"monomial exponents must be >= 0, got {self.exps}")

    @classmethod
    def one(cls, n: int) -> Monomial:
        return cls((0,) * n)

    @classmethod
    def unit(cls, n: int, i: int) -> Monomial:
        exps = [0] * n
        exps[i] = 1
        return cls(tuple(exps))

    @property
    def n(self) -> int:
        return len(self.exps)

    @property
    def degree(self) -> int:
        return sum(self.exps)

    def __add__(self, other: Monomial) -> Monomial:
        return Monomial(tuple(a + b for a, b in zip(self.exps, other.exps)))

    def shifted(self, i: int, delta: int) -> Monomial:
        exps = list(self.exps)
        exps[i] += delta
        return Monomial(tuple(exps))

    def word(self) -> list[int]:
        """The ordered word x_0...x_0 x_1...x_1 ... that this monomial normalizes."""
        return [i for i, a in enumerate(self.exps) for _ in range(a)]

    def __repr__(self) -> str:
        return f"x^{list(self.exps)}"


@dataclass(frozen=True, slots=True, order=True)
class WedgeIndex:
    """beta in {0,1}^N, naming x^{wedge beta} (or its dual)."""

    bits: tuple[int, ...]

    def __post_init__(self) -> None:
        if any(b not in (0, 1) for b in self.bits):
            raise StructuralError(f"wedge index entries must be 0 or 1, got {self.bits}")

    @classmethod
    def empty(cls, n: int) -> WedgeIndex:
        return cls((0,) * n)

    @classmethod
    def from_support(cls, n: int, support: Sequence[int]) -> WedgeIndex:
        bits = [0] * n
        for i in support:
            if bits[i]:
                raise PreconditionError(f"repeated wedge index {i}")
            bits[i] = 1
        return cls(tuple(bits))

    @property
    def n(self) -> int:
        return len(self.bits)

    @property
    def degree(self) -> int:
        return sum(self.bits)

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(i for i, b in enumerate(self.bits) if b)

    def with_bit(self, i: int, value: int) -> WedgeIndex:
        bits = list(self.bits)
        bits[i] = value
        return WedgeIndex(tuple(bits))

    def __repr__(self) -> str:
        return f"wedge{list(self.support)}"


def _check_indices(instance: QInstance, word: Sequence[int]) -> None:
    for w in word:
        if not 0 <= w < instance.n:
            raise StructuralError(f"generator index {w} out of range for N={instance.n}")


def normal_order(instance: QInstance, word: Sequence[int]) -> tuple[ScalarExponent, Monomial]:
    """x_{w_1}...x_{w_k} = s * x^alpha, by inversion counting.

    Every pair of positions p < p' with w_p = a > b = w_p' contributes q(a, b).
    """
    _check_indices(instance, word)
    n = instance.n
    seen = [0] * n
    inversions = [[0] * n for _ in range(n)]
    for b in word:
        for a in range(b + 1, n):
            inversions[a][b] += seen[a]
        seen[b] += 1
    scalar = instance.spec.identity()
    for a in range(n):
        for b in range(a):
            if inversions[a][b]:
                scalar = scalar * instance.qs(a, b) ** inversions[a][b]
    return scalar, Monomial(tuple(seen))


def normal_order_by_rewriting(
    instance: QInstance, word: Sequence[int]
) -> tuple[ScalarExponent, Monomial]:
    """Same result as `normal_order`, by literal adjacent swaps x_a x_b -> q(a,b) x_b x_a."""
    _check_indices(instance, word)
    letters = list(word)
    scalar = instance.spec.identity()
    swapped = True
    while swapped:
        swapped = False
        for p in range(len(letters) - 1):
            a, b = letters[p], letters[p + 1]
            if a > b:
                scalar = scalar * instance.qs(a, b)
                letters[p], letters[p + 1] = b, a
                swapped = True
    exps = [0] * instance.n
    for w in letters:
        exps[w] += 1
    return scalar, Monomial(tuple(exps))


def mono_mul(
    instance: QInstance, alpha: Monomial, alpha2: Monomial
) -> tuple[ScalarExponent, Monomial]:
    """x^alpha * x^alpha2 = s * x^(alpha+alpha2), s = prod_{i>j} q(i,j)^(alpha_i*alpha2_j)."""
    scalar = instance.spec.identity()
    for i in range(instance.n):
        if not alpha.exps[i]:
            continue
        for j in range(i):
            power = alpha.exps[i] * alpha2.exps[j]
            if power:
                scalar = scalar * instance.qs(i, j) ** power
    return scalar, alpha + alpha2


def q_pi(instance: QInstance, indices: Sequence[int], perm: Sequence[int]) -> ScalarExponent:
    """The scalar q_pi with q_pi * x_{j_pi(0)}...x_{j_pi(k-1)} = x_{j_0}...x_{j_{k-1}}.

    `perm` lists the images pi(0), ..., pi(k-1).
    """
    if len(set(indices)) != len(indices):
        raise PreconditionError(f"q_pi needs distinct indices, got {list(indices)}")
    if sorted(perm) != list(range(len(indices))):
        raise PreconditionError(f"{list(perm)} is not a permutation of {len(indices)} letters")
    original, _ = normal_order(instance, indices)
    permuted, _ = normal_order(instance, [indices[p] for p in perm])
    return original / permuted


def skew_mul(
    instance: QInstance, left: tuple[Monomial, int], right: tuple[Monomial, int]
) -> tuple[ScalarExponent, Monomial, int]:
    """(x^alpha # g)(x^alpha2 # h) = lambda_g^alpha2 * x^alpha x^alpha2 # gh."""
    alpha, g = left
    alpha2, h = right
    instance.check_element(g)
    instance.check_element(h)
    scalar, product = mono_mul(instance, alpha, alpha2)
    for i, a in enumerate(alpha2.exps):
        if a:
            scalar = scalar * instance.lam(g, i) ** a
    return scalar, product, instance.mul(g, h)


def act(instance: QInstance, g: int, alpha: Monomial, beta: WedgeIndex) -> ScalarExponent:
    """prod_i lambda_{g,i}^(alpha_i - beta_i): how g rescales (x^alpha # h) (x)*^beta.

    The dual generators transform contragrediently, x_i* -> lambda_{g,i}^-1 x_i*.
    """
    instance.check_element(g)
    scalar = instance.spec.identity()
    for i in range(instance.n):
        power = alpha.exps[i] - beta.bits[i]
        if power:
            scalar = scalar * instance.lam(g, i) ** power
    return scalar
