"""Closed-form Hochschild cohomology of S_q(V) with coefficients in S_q(V) # G.

HH^m(A, A # G) has basis the keys (x^alpha # g) (x) (x*)^{wedge beta} with
|beta| = m and alpha - beta in C_g. Everything below enumerates those keys under
an internal-degree cap D and tabulates or filters them.
"""

from __future__ import annotations

import itertools
import logging
from collections.abc import Iterator
from dataclasses import dataclass, field

from hochq.algebra.instance import QInstance
from hochq.algebra.monomials import Monomial, WedgeIndex, act, mono_mul, skew_mul
from hochq.complexes.koszul import CochainKey, Gamma, all_wedges, gamma_norm
from hochq.errors import PreconditionError

logger = logging.getLogger(__name__)


def in_C_g(instance: QInstance, gamma: Gamma, g: int) -> bool:  # noqa: N802
    """For every i: gamma_i = -1 or prod_s q(i,s)^gamma_s = lambda_{g,i}."""
    instance.check_element(g)
    return gamma_norm(instance, g, gamma) == 0


def monomials_up_to(n: int, cap: int) -> Iterator[Monomial]:
    """All x^alpha with |alpha| <= cap, in lexicographic order of alpha."""
    for exps in itertools.product(range(cap + 1), repeat=n):
        if sum(exps) <= cap:
            yield Monomial(exps)


def gamma_signatures(n: int, cap: int) -> Iterator[Gamma]:
    """gamma in {-1, 0, ..., cap}^n with the non-negative entries summing to at most cap."""
    for gamma in itertools.product(range(-1, cap + 1), repeat=n):
        if sum(c for c in gamma if c > 0) <= cap:
            yield gamma


@dataclass(frozen=True, slots=True, order=True)
class CohomologyClass:
    """A basis class of HH^m(A, A # G): a cochain key whose signature lies in C_g."""

    key: CochainKey

    @classmethod
    def checked(cls, instance: QInstance, key: CochainKey) -> CohomologyClass:
        if not in_C_g(instance, key.gamma, key.g):
            raise PreconditionError(f"{key!r} is not a cohomology class (gamma outside C_g)")
        return cls(key)

    @property
    def g(self) -> int:
        return self.key.g

    @property
    def alpha(self) -> Monomial:
        return self.key.alpha

    @property
    def beta(self) -> WedgeIndex:
        return self.key.beta

    @property
    def degree(self) -> int:
        return self.key.degree


def hh_basis(instance: QInstance, g: int, m: int, cap: int) -> list[CohomologyClass]:
    """Classes of HH^m_g with |alpha| <= cap, ordered by alpha then beta."""
    if cap < 0:
        raise PreconditionError(f"degree cap must be >= 0, got {cap}")
    instance.check_element(g)
    n = instance.n
    if m > n or m < 0:
        return []
    wedges = list(all_wedges(n, m))
    classes = []
    for alpha in monomials_up_to(n, cap):
        for beta in wedges:
            gamma = tuple(a - b for a, b in zip(alpha.exps, beta.bits))
            if gamma_norm(instance, g, gamma) == 0:
                classes.append(CohomologyClass(CochainKey(g, alpha, beta)))
    return sorted(classes)


@dataclass(frozen=True)
class DimensionTable:
    """dim HH^m_g in internal degree d, for every g, m <= N and d <= cap."""

    degree_cap: int
    n: int
    group_order: int
    entries: dict[tuple[int, int, int], int] = field(default_factory=dict)
    invariant: dict[tuple[int, int], int] = field(default_factory=dict)

    def dim(self, g: int, m: int, d: int) -> int:
        return self.entries.get((g, m, d), 0)

    def invariant_dim(self, m: int, d: int) -> int:
        return self.invariant.get((m, d), 0)

    def total(self, m: int, g: int | None = None) -> int:
        return sum(
            v for (gg, mm, _), v in self.entries.items() if mm == m and (g is None or gg == g)
        )

    def invariant_total(self, m: int) -> int:
        return sum(v for (mm, _), v in self.invariant.items() if mm == m)

    def rows(self) -> list[tuple[int, int, int, int, int]]:
        """(g_id, m, internal_degree, dim, invariant_dim), sorted."""
        return [
            (g, m, d, value, self.invariant_dim(m, d))
            for (g, m, d), value in sorted(self.entries.items())
        ]


def hh_dim_table(instance: QInstance, cap: int) -> DimensionTable:
    table = DimensionTable(degree_cap=cap, n=instance.n, group_order=instance.group_order)
    for g in instance.elements:
        for m in range(instance.n + 1):
            for d in range(cap + 1):
                table.entries[(g, m, d)] = 0
            for cls in hh_basis(instance, g, m, cap):
                table.entries[(g, m, cls.alpha.degree)] += 1
    for m in range(instance.n + 1):
        for d in range(cap + 1):
            table.invariant[(m, d)] = 0
        for cls in invariant_basis(instance, m, cap):
            table.invariant[(m, cls.alpha.degree)] += 1
    logger.info(
        "Dimension table: n=%d |G|=%d cap=%d totals=%s",
        instance.n, instance.group_order, cap,
        [table.total(m) for m in range(instance.n + 1)],
    )
    return table


def is_invariant(instance: QInstance, key: CochainKey) -> bool:
    """h rescales the key by lambda_h^(alpha - beta); invariance is elementwise."""
    return all(act(instance, h, key.alpha, key.beta).is_one() for h in instance.elements)


def invariant_basis(instance: QInstance, m: int, cap: int) -> list[CohomologyClass]:
    """G-invariant classes of degree m across all g, ordered by g then alpha then beta."""
    return [
        cls
        for g in instance.elements
        for cls in hh_basis(instance, g, m, cap)
        if is_invariant(instance, cls.key)
    ]


def center_basis(instance: QInstance, cap: int) -> list[Monomial]:
    """Monomials of degree <= cap commuting with every x_i (the group is ignored)."""
    n = instance.n
    units = [Monomial.unit(n, i) for i in range(n)]
    central = []
    for alpha in monomials_up_to(n, cap):
        if all(
            mono_mul(instance, alpha, unit)[0] == mono_mul(instance, unit, alpha)[0]
            for unit in units
        ):
            central.append(alpha)
    return central


def skew_center_basis(instance: QInstance, cap: int) -> list[tuple[Monomial, int]]:
    """x^alpha # g with |alpha| <= cap central in A # G, sorted by g then alpha."""
    n = instance.n
    one = Monomial.one(n)
    units = [Monomial.unit(n, i) for i in range(n)]
    central = []
    for g in instance.elements:
        for alpha in monomials_up_to(n, cap):
            element = (alpha, g)
            commutes = all(
                skew_mul(instance, element, (unit, instance.identity))
                == skew_mul(instance, (unit, instance.identity), element)
                for unit in units
            ) and all(
                skew_mul(instance, element, (one, h)) == skew_mul(instance, (one, h), element)
                for h in instance.elements
            )
            if commutes:
                central.append(element)
    return central


@dataclass(frozen=True)
class DegreeTotals:
    per_degree: dict[int, int]
    invariant: dict[int, int]


def degree_totals(table: DimensionTable) -> DegreeTotals:
    """Total dimension per cohomological degree (all g, all d <= cap) and invariant totals."""
    degrees = range(table.n + 1)
    return DegreeTotals(
        per_degree={m: table.total(m) for m in degrees},
        invariant={m: table.invariant_total(m) for m in degrees},
    )
