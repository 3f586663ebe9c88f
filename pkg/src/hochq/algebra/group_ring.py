"""Integer group-ring coefficients and linear combinations over them.

A `GroupRingElement` is a finite formal sum  sum_k c_k * [e_k]  with integer
c_k and scalar-group elements e_k. Every differential and chain-map entry is
such an element, so identities like d*d = 0 are decided by map equality with
no numeric specialization involved.
"""

from __future__ import annotations

from collections.abc import Hashable, Iterable, Iterator, Mapping
from typing import Generic, TypeVar

from hochq.arithmetic.cyclotomic import CyclotomicNumber
from hochq.arithmetic.scalars import ScalarExponent
from hochq.arithmetic.specialization import Specialization


def scalar_sort_key(e: ScalarExponent) -> tuple[tuple[int, ...], int]:
    return (e.free, e.torsion)


class GroupRingElement:
    """Immutable formal Z-combination of scalars; the empty map is zero."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[ScalarExponent, int] | None = None) -> None:
        self._terms: dict[ScalarExponent, int] = {
            e: c for e, c in (terms or {}).items() if c
        }

    @classmethod
    def zero(cls) -> GroupRingElement:
        return cls()

    @classmethod
    def of(cls, e: ScalarExponent, coeff: int = 1) -> GroupRingElement:
        return cls({e: coeff})

    @classmethod
    def _raw(cls, terms: dict[ScalarExponent, int]) -> GroupRingElement:
        obj = cls.__new__(cls)
        obj._terms = terms
        return obj

    @property
    def terms(self) -> Mapping[ScalarExponent, int]:
        return dict(self._terms)

    def items(self) -> list[tuple[ScalarExponent, int]]:
        return sorted(self._terms.items(), key=lambda kv: scalar_sort_key(kv[0]))

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GroupRingElement):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __add__(self, other: GroupRingElement) -> GroupRingElement:
        result = dict(self._terms)
        for e, c in other._terms.items():
            total = result.get(e, 0) + c
            if total:
                result[e] = total
            else:
                result.pop(e, None)
        return GroupRingElement._raw(result)

    def __neg__(self) -> GroupRingElement:
        return GroupRingElement._raw({e: -c for e, c in self._terms.items()})

    def __sub__(self, other: GroupRingElement) -> GroupRingElement:
        return self + (-other)

    def __mul__(self, other: GroupRingElement | int) -> GroupRingElement:
        if isinstance(other, int):
            if not other:
                return GroupRingElement()
            return GroupRingElement._raw({e: c * other for e, c in self._terms.items()})
        result: dict[ScalarExponent, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                key = e1 * e2
                total = result.get(key, 0) + c1 * c2
                if total:
                    result[key] = total
                else:
                    result.pop(key, None)
        return GroupRingElement._raw(result)

    __rmul__ = __mul__

    def times_scalar(self, e: ScalarExponent) -> GroupRingElement:
        """Multiply by the basis element [e]."""
        if e.is_one():
            return self
        return GroupRingElement._raw({k * e: c for k, c in self._terms.items()})

    def max_free(self) -> int:
        return max((e.max_free() for e in self._terms), default=0)

    def specialize(self, s: Specialization) -> CyclotomicNumber:
        powers: dict[int, int] = {}
        for e, c in self._terms.items():
            if not s.covers(e):
                s.specialize(e)  # raises the box error
            k = s.exponent(e)
            powers[k] = powers.get(k, 0) + c
        return CyclotomicNumber.from_power_sums(s.target_order, powers)

    def __repr__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for e, c in self.items():
            parts.append(f"{c}*[{list(e.free)}|{e.torsion}]")
        return " + ".join(parts)


K = TypeVar("K", bound=Hashable)


class LinearCombination(Generic[K]):
    """Finite map key -> nonzero GroupRingElement, with module operations."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Iterable[tuple[K, GroupRingElement]] = ()) -> None:
        self._terms: dict[K, GroupRingElement] = {}
        for key, coeff in terms:
            self.add_term(key, coeff)

    def add_term(self, key: K, coeff: GroupRingElement) -> None:
        """In-place accumulation; only used while a combination is being built."""
        if coeff.is_zero():
            return
        total = self._terms.get(key)
        total = coeff if total is None else total + coeff
        if total.is_zero():
            self._terms.pop(key, None)
        else:
            self._terms[key] = total

    def coefficient(self, key: K) -> GroupRingElement:
        return self._terms.get(key, GroupRingElement())

    def keys(self) -> list[K]:
        return list(self._terms)

    def items(self) -> list[tuple[K, GroupRingElement]]:
        return list(self._terms.items())

    def __iter__(self) -> Iterator[K]:
        return iter(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LinearCombination):
            return NotImplemented
        return self._terms == other._terms

    def __add__(self, other: LinearCombination[K]) -> LinearCombination[K]:
        result = self._copy()
        for key, coeff in other._terms.items():
            result.add_term(key, coeff)
        return result

    def __neg__(self) -> LinearCombination[K]:
        return self._build((key, -coeff) for key, coeff in self._terms.items())

    def __sub__(self, other: LinearCombination[K]) -> LinearCombination[K]:
        return self + (-other)

    def scaled(self, coeff: GroupRingElement) -> LinearCombination[K]:
        return self._build((key, value * coeff) for key, value in self._terms.items())

    def _copy(self) -> LinearCombination[K]:
        return self._build(self._terms.items())

    def _build(self, terms: Iterable[tuple[K, GroupRingElement]]) -> LinearCombination[K]:
        return type(self)(terms)

    def __repr__(self) -> str:
        inner = ", ".join(f"{key!r}: {coeff!r}" for key, coeff in self._terms.items())
        return f"{type(self).__name__}({{{inner}}})"
