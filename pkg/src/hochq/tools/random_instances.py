"""Seeded random instances for property checks and the chainmap-check command."""

from __future__ import annotations

import random
from collections.abc import Sequence

from hochq.models.schemas import (
    GroupRecord,
    InstanceFile,
    ScalarGroupRecord,
    ScalarRecord,
)

DEFAULT_TORSION_ORDERS = (2, 3, 4, 5)


def random_torsion_instance(
    rng: random.Random,
    n: int,
    *,
    orders: Sequence[int] = DEFAULT_TORSION_ORDERS,
    with_group: bool = True,
    degree_cap: int | None = None,
) -> InstanceFile:
    """q_{i,j} and a cyclic G drawn from the m-th roots of unity, m from `orders`.

    All scalars have finite order, so the oracle field is Q(zeta_m) itself.
    """
    m = rng.choice(list(orders))
    pairs = n * (n - 1) // 2
    generators = []
    if with_group:
        generators.append([rng.randrange(m) for _ in range(n)])
    return InstanceFile(
        name=f"random-n{n}-m{m}",
        n=n,
        scalar_group=ScalarGroupRecord(free_rank=0, torsion_order=m),
        q_exponents=[ScalarRecord(torsion=rng.randrange(m)) for _ in range(pairs)],
        group=GroupRecord(generators=generators),
        degree_cap=degree_cap,
    )
