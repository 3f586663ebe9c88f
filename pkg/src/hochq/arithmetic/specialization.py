"""Sound specialization of the scalar group into a cyclotomic field.

The generic parameters t_k have infinite order, so the oracle cannot compute
with them directly. A specialization sends t_k to a root of unity of large
prime order and zeta to a primitive m-th root of unity inside Q(zeta_L); it is
only trusted on an exponent box |free_k| <= bound. The free images are the
powers of B + 1, which is injective on the box as soon as P >= (B + 1)^r;
injectivity is still checked by enumeration when the specialization is chosen.
"""

from __future__ import annotations

import itertools
import logging
import math
from dataclasses import dataclass

from sympy import nextprime, totient

from hochq.arithmetic.cyclotomic import CyclotomicNumber
from hochq.arithmetic.scalars import ScalarExponent, ScalarGroupSpec
from hochq.errors import SpecializationBoundError, StructuralError

logger = logging.getLogger(__name__)


@dataclass(frozen=True, slots=True)
class Specialization:
    """t_k -> zeta_L^{free_images[k]}, zeta -> zeta_L^{torsion_image}."""

    spec: ScalarGroupSpec
    target_order: int
    torsion_image: int
    free_images: tuple[int, ...]
    bound: int

    def covers(self, e: ScalarExponent) -> bool:
        return e.max_free() <= self.bound

    def exponent(self, e: ScalarExponent) -> int:
        """The power of zeta_L that `e` maps to."""
        if e.order != self.spec.torsion_order or e.free_rank != self.spec.free_rank:
            raise StructuralError(
                f"scalar from group (rank {e.free_rank}, order {e.order}) does not match "
                f"specialization (rank {self.spec.free_rank}, order {self.spec.torsion_order})"
            )
        total = self.torsion_image * e.torsion
        total += sum(c * a for c, a in zip(self.free_images, e.free))
        return total % self.target_order

    def specialize(self, e: ScalarExponent, *, strict: bool = True) -> CyclotomicNumber:
        if strict and not self.covers(e):
            raise SpecializationBoundError(
                f"{e!r} exceeds the verified box |free| <= {self.bound}"
            )
        return CyclotomicNumber.root_power(self.target_order, self.exponent(e))


def specialize(e: ScalarExponent, s: Specialization) -> CyclotomicNumber:
    return s.specialize(e)


def _units(order: int) -> list[int]:
    return [u for u in range(1, max(order, 2)) if math.gcd(u, order) == 1]


def box_is_injective(prime: int, free_images: tuple[int, ...], bound: int) -> bool:
    """True when no nonzero f with |f_k| <= bound has sum f_k * c_k = 0 mod prime.

    Every such f is a difference of two points of [0, bound]^r, so it is enough
    to check that the map is injective on that half box.
    """
    seen: set[int] = set()
    for point in itertools.product(range(bound + 1), repeat=len(free_images)):
        value = sum(c * a for c, a in zip(free_images, point)) % prime
        if value in seen:
            return False
        seen.add(value)
    return True


def minimal_prime(free_rank: int, bound: int) -> int:
    """Smallest size a prime can have and still separate the box, (B + 1)^r."""
    return (bound + 1) ** free_rank


def choose_specialization(
    spec: ScalarGroupSpec,
    bound: int,
    *,
    variant: int = 0,
    max_field_degree: int | None = None,
) -> Specialization:
    """Pick a specialization injective on the box |free_k| <= bound.

    With no free parameters the target is Q(zeta_m) itself. Otherwise the
    target is Q(zeta_{m*P}) for the first prime P > max(2*bound, (B+1)^r - 1)
    coprime to m, with t_k -> zeta_L^{m*(B+1)^k}. `variant` selects an
    independent choice: a Galois conjugate of zeta_m when r = 0, and a later
    admissible prime otherwise. A field of degree above `max_field_degree`
    raises SpecializationBoundError before any arithmetic is done.
    """
    if bound < 1:
        raise StructuralError(f"specialization bound must be >= 1, got {bound}")
    m = spec.torsion_order

    if spec.free_rank == 0:
        units = _units(m)
        image = units[variant % len(units)] if m > 1 else 0
        logger.debug("Specialization L=%d zeta->%d (torsion only)", m, image)
        return Specialization(spec, m, image, (), bound)

    floor = max(2 * bound, minimal_prime(spec.free_rank, bound) - 1)
    if max_field_degree is not None:
        smallest_degree = int(totient(m)) * floor
        if smallest_degree > max_field_degree:
            raise SpecializationBoundError(
                f"rank {spec.free_rank} with box {bound} needs a field of degree >= "
                f"{smallest_degree}, above the limit {max_field_degree}; lower the degree cap"
            )

    prime = int(nextprime(floor))
    skipped = 0
    while m % prime == 0 or skipped < variant:
        if m % prime:
            skipped += 1
        prime = int(nextprime(prime))

    target = m * prime
    degree = int(totient(target))
    if max_field_degree is not None and degree > max_field_degree:
        raise SpecializationBoundError(
            f"Q(zeta_{target}) has degree {degree}, above the limit {max_field_degree}"
        )
    base = bound + 1
    residues = tuple(pow(base, k, prime) for k in range(spec.free_rank))
    if not box_is_injective(prime, residues, bound):
        raise StructuralError(f"powers of {base} do not separate the box {bound} mod {prime}")
    logger.debug(
        "Specialization L=%d (P=%d, base=%d, degree %d) injective on box %d",
        target, prime, base, degree, bound,
    )
    return Specialization(spec, target, prime, tuple(m * c for c in residues), bound)
