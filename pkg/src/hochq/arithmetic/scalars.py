"""Multiplicative scalar group generated by free parameters and one root of unity.

Every scalar the algebra manipulates (q_{i,j}, group characters, permutation
scalars, products of these) is an element of Z^r x Z/m, written additively as
an exponent vector: t_1^{a_1} ... t_r^{a_r} * zeta^c.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass

from hochq.errors import StructuralError


@dataclass(frozen=True, slots=True)
class ScalarGroupSpec:
    """r free generic parameters and a root of unity of order m."""

    free_rank: int
    torsion_order: int = 1

    def __post_init__(self) -> None:
        if self.free_rank < 0:
            raise StructuralError(f"free_rank must be >= 0, got {self.free_rank}")
        if self.torsion_order < 1:
            raise StructuralError(f"torsion_order must be >= 1, got {self.torsion_order}")

    def identity(self) -> ScalarExponent:
        return ScalarExponent((0,) * self.free_rank, 0, self.torsion_order)

    def scalar(self, free: Sequence[int] = (), torsion: int = 0) -> ScalarExponent:
        free_part = tuple(free) if free else (0,) * self.free_rank
        if len(free_part) != self.free_rank:
            raise StructuralError(
                f"free part has length {len(free_part)}, expected {self.free_rank}"
            )
        return ScalarExponent(free_part, torsion, self.torsion_order)

    def parameter(self, k: int) -> ScalarExponent:
        """The k-th generic parameter t_k (0-based)."""
        if not 0 <= k < self.free_rank:
            raise StructuralError(f"parameter index {k} out of range for rank {self.free_rank}")
        free = [0] * self.free_rank
        free[k] = 1
        return ScalarExponent(tuple(free), 0, self.torsion_order)

    def root_of_unity(self, power: int = 1) -> ScalarExponent:
        return ScalarExponent((0,) * self.free_rank, power, self.torsion_order)

    def sign(self, negative: bool) -> ScalarExponent:
        """-1 as a scalar; needs an even torsion order."""
        if not negative:
            return self.identity()
        if self.torsion_order % 2:
            raise StructuralError(f"-1 is not in the group for torsion order {self.torsion_order}")
        return self.root_of_unity(self.torsion_order // 2)


@dataclass(frozen=True, slots=True)
class ScalarExponent:
    """t^free * zeta^torsion, torsion kept reduced to [0, order)."""

    free: tuple[int, ...]
    torsion: int
    order: int

    def __post_init__(self) -> None:
        if self.order < 1:
            raise StructuralError(f"torsion order must be >= 1, got {self.order}")
        reduced = self.torsion % self.order
        if reduced != self.torsion:
            object.__setattr__(self, "torsion", reduced)

    @property
    def free_rank(self) -> int:
        return len(self.free)

    def _check_compatible(self, other: ScalarExponent) -> None:
        if len(self.free) != len(other.free) or self.order != other.order:
            raise StructuralError(
                "scalars from different groups: "
                f"(rank {len(self.free)}, order {self.order}) vs "
                f"(rank {len(other.free)}, order {other.order})"
            )

    def __mul__(self, other: ScalarExponent) -> ScalarExponent:
        self._check_compatible(other)
        return ScalarExponent(
            tuple(a + b for a, b in zip(self.free, other.free)),
            self.torsion + other.torsion,
            self.order,
        )

    def __truediv__(self, other: ScalarExponent) -> ScalarExponent:
        return self * other.inverse()

    def __pow__(self, k: int) -> ScalarExponent:
        return ScalarExponent(tuple(a * k for a in self.free), self.torsion * k, self.order)

    def inverse(self) -> ScalarExponent:
        return ScalarExponent(tuple(-a for a in self.free), -self.torsion, self.order)

    def is_one(self) -> bool:
        return self.torsion == 0 and not any(self.free)

    def max_free(self) -> int:
        """Largest absolute free exponent (0 for a pure root of unity)."""
        return max((abs(a) for a in self.free), default=0)

    def __repr__(self) -> str:
        return f"ScalarExponent(free={list(self.free)}, torsion={self.torsion}, m={self.order})"


def scalar_mul(a: ScalarExponent, b: ScalarExponent) -> ScalarExponent:
    return a * b


def scalar_pow(a: ScalarExponent, k: int) -> ScalarExponent:
    return a**k


def is_one(a: ScalarExponent) -> bool:
    return a.is_one()


def scalar_product(factors: Sequence[ScalarExponent], identity: ScalarExponent) -> ScalarExponent:
    """Product of a sequence of scalars, starting from `identity`."""
    result = identity
    for factor in factors:
        result = result * factor
    return result
