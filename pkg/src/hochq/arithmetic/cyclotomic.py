"""Exact arithmetic in the cyclotomic field Q(zeta_L).

Elements are rational coefficient vectors in the power basis 1, z, ..., z^(d-1)
with d = phi(L), always reduced modulo the L-th cyclotomic polynomial so that
equality (and the zero test in particular) is plain vector equality. Dense
polynomial kernels come from sympy's low-level ``dup_*`` routines.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Any, Literal, NamedTuple, overload

from sympy import divisors
from sympy.polys.densearith import dup_exquo, dup_mul, dup_rem
from sympy.polys.densebasic import dup_strip
from sympy.polys.domains import QQ, ZZ
from sympy.polys.euclidtools import dup_gcdex

from hochq.errors import CyclotomicZeroDivisionError, StructuralError

Rational = Any  # element of sympy's QQ domain (PythonMPQ or gmpy2.mpq)


@lru_cache(maxsize=None)
def _cyclotomic_dup(order: int) -> tuple[int, ...]:
    """Phi_order over ZZ, highest degree first.

    x^L - 1 divided exactly by Phi_d for every proper divisor d of L.
    """
    poly = [ZZ(1)] + [ZZ(0)] * (order - 1) + [ZZ(-1)]
    for d in divisors(order)[:-1]:
        poly = dup_exquo(poly, list(_cyclotomic_dup(int(d))), ZZ)
    return tuple(int(c) for c in poly)


def cyclotomic_polynomial(order: int) -> tuple[Rational, ...]:
    """Coefficients of the order-th cyclotomic polynomial, constant term first."""
    if order < 1:
        raise StructuralError(f"cyclotomic order must be >= 1, got {order}")
    return tuple(QQ(c) for c in reversed(_cyclotomic_dup(order)))


class _Field(NamedTuple):
    order: int
    degree: int
    modulus: list[Rational]  # Phi_L over QQ, highest degree first


@lru_cache(maxsize=None)
def _field(order: int) -> _Field:
    if order < 1:
        raise StructuralError(f"cyclotomic order must be >= 1, got {order}")
    modulus = [QQ(c) for c in _cyclotomic_dup(order)]
    return _Field(order=order, degree=len(modulus) - 1, modulus=modulus)


def field_degree(order: int) -> int:
    """phi(L), the dimension of Q(zeta_L) over Q."""
    return _field(order).degree


@dataclass(frozen=True, slots=True)
class CyclotomicNumber:
    """An element of Q(zeta_order) in reduced power-basis form."""

    coeffs: tuple[Rational, ...]
    order: int

    # construction --------------------------------------------------------

    @classmethod
    def _from_dup(cls, order: int, poly: list[Rational]) -> CyclotomicNumber:
        field = _field(order)
        reduced = dup_rem(poly, field.modulus, QQ) if len(poly) > field.degree else poly
        low_first = list(reversed(reduced))
        low_first.extend([QQ.zero] * (field.degree - len(low_first)))
        return cls(tuple(low_first), order)

    def _to_dup(self) -> list[Rational]:
        return dup_strip(list(reversed(self.coeffs)))

    @classmethod
    def zero(cls, order: int) -> CyclotomicNumber:
        return cls((QQ.zero,) * _field(order).degree, order)

    @classmethod
    def from_rational(cls, order: int, value: Rational | int) -> CyclotomicNumber:
        degree = _field(order).degree
        return cls((QQ(value),) + (QQ.zero,) * (degree - 1), order)

    @classmethod
    def one(cls, order: int) -> CyclotomicNumber:
        return cls.from_rational(order, 1)

    @classmethod
    def root_power(cls, order: int, k: int) -> CyclotomicNumber:
        """zeta_order ** k."""
        return _root_power(order, k % order)

    @classmethod
    def from_power_sums(cls, order: int, powers: dict[int, int]) -> CyclotomicNumber:
        """sum_k c_k * zeta_order^k for integer c_k."""
        if not powers:
            return cls.zero(order)
        top = max(k % order for k in powers)
        poly = [QQ.zero] * (top + 1)
        for k, c in powers.items():
            poly[top - k % order] += QQ(c)
        return cls._from_dup(order, dup_strip(poly))

    # arithmetic ----------------------------------------------------------

    def _check(self, other: CyclotomicNumber) -> None:
        if self.order != other.order:
            raise StructuralError(
                f"cyclotomic orders differ: {self.order} vs {other.order}"
            )

    def __add__(self, other: CyclotomicNumber) -> CyclotomicNumber:
        self._check(other)
        return CyclotomicNumber(
            tuple(a + b for a, b in zip(self.coeffs, other.coeffs)), self.order
        )

    def __sub__(self, other: CyclotomicNumber) -> CyclotomicNumber:
        self._check(other)
        return CyclotomicNumber(
            tuple(a - b for a, b in zip(self.coeffs, other.coeffs)), self.order
        )

    def __neg__(self) -> CyclotomicNumber:
        return CyclotomicNumber(tuple(-a for a in self.coeffs), self.order)

    @overload
    def __mul__(self, other: CyclotomicNumber) -> CyclotomicNumber: ...

    @overload
    def __mul__(self, other: int) -> CyclotomicNumber: ...

    def __mul__(self, other: CyclotomicNumber | int) -> CyclotomicNumber:
        if isinstance(other, CyclotomicNumber):
            self._check(other)
            if other.is_zero() or self.is_zero():
                return CyclotomicNumber.zero(self.order)
            product = dup_mul(self._to_dup(), other._to_dup(), QQ)
            return CyclotomicNumber._from_dup(self.order, product)
        return self.scale(other)

    __rmul__ = __mul__

    def scale(self, value: Rational | int) -> CyclotomicNumber:
        factor = QQ(value)
        return CyclotomicNumber(tuple(a * factor for a in self.coeffs), self.order)

    def inverse(self) -> CyclotomicNumber:
        if self.is_zero():
            raise CyclotomicZeroDivisionError(f"inverse of zero in Q(zeta_{self.order})")
        field = _field(self.order)
        s, _t, h = dup_gcdex(self._to_dup(), field.modulus, QQ)
        if h != [QQ.one]:
            # Phi_L is irreducible, so a nonzero reduced element is always coprime to it.
            raise StructuralError(f"non-unit gcd {h} while inverting in Q(zeta_{self.order})")
        return CyclotomicNumber._from_dup(self.order, s)

    def __truediv__(self, other: CyclotomicNumber) -> CyclotomicNumber:
        return self * other.inverse()

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def is_one(self) -> bool:
        return self.coeffs[0] == 1 and not any(self.coeffs[1:])

    def __repr__(self) -> str:
        terms = [
            f"{c}*z^{k}" if k else f"{c}"
            for k, c in enumerate(self.coeffs)
            if c
        ]
        return f"Q(zeta_{self.order})[{' + '.join(terms) or '0'}]"


@lru_cache(maxsize=4096)
def _root_power(order: int, k: int) -> CyclotomicNumber:
    monomial = [QQ.one] + [QQ.zero] * k
    return CyclotomicNumber._from_dup(order, monomial)


Operation = Literal["add", "sub", "mul", "inv", "neg", "is_zero"]


def cyc_arith(
    op: Operation, a: CyclotomicNumber, b: CyclotomicNumber | None = None
) -> CyclotomicNumber | bool:
    """Field operation dispatcher over Q(zeta_L)."""
    if op == "is_zero":
        return a.is_zero()
    if op == "inv":
        return a.inverse()
    if op == "neg":
        return -a
    if b is None:
        raise StructuralError(f"operation {op!r} needs two operands")
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise StructuralError(f"unknown cyclotomic operation {op!r}")

