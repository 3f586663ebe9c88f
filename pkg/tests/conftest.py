"""Shared fixtures: the worked instances."""

from pathlib import Path

import pytest

from hochq.algebra.instance import QInstance
from hochq.models.schemas import (
    GroupRecord,
    InstanceFile,
    ScalarGroupRecord,
    ScalarRecord,
)
from hochq.tools.instance_loader import build_instance

INSTANCES_DIR = Path(__file__).parent.parent / "config" / "instances"


def make_instance(
    n: int,
    q: list[ScalarRecord],
    *,
    free_rank: int = 0,
    torsion_order: int = 1,
    generators: list[list[int]] | None = None,
) -> QInstance:
    model = InstanceFile(
        n=n,
        scalar_group=ScalarGroupRecord(free_rank=free_rank, torsion_order=torsion_order),
        q_exponents=q,
        group=GroupRecord(generators=generators or []),
    )
    return build_instance(model)


@pytest.fixture
def instances_dir() -> Path:
    return INSTANCES_DIR


@pytest.fixture
def generic_n2() -> QInstance:
    """N = 2, q = t generic, G trivial."""
    return make_instance(2, [ScalarRecord(free=[1])], free_rank=1)


@pytest.fixture
def root3_n2() -> QInstance:
    """N = 2, q a primitive cube root of unity, G trivial."""
    return make_instance(2, [ScalarRecord(torsion=1)], torsion_order=3)


@pytest.fixture
def group_order2() -> QInstance:
    """N = 2, q = t generic, G = {e, g} with lambda_g = (-1, -1)."""
    return make_instance(
        2, [ScalarRecord(free=[1])], free_rank=1, torsion_order=2, generators=[[1, 1]]
    )


@pytest.fixture
def group_root3() -> QInstance:
    """N = 2, q = zeta_3, G cyclic of order 3 generated by lambda_g = (zeta, zeta^2)."""
    return make_instance(2, [ScalarRecord(torsion=1)], torsion_order=3, generators=[[1, 2]])


@pytest.fixture
def generic_n3() -> QInstance:
    """N = 3 with three independent generic parameters."""
    return make_instance(
        3,
        [ScalarRecord(free=[1, 0, 0]), ScalarRecord(free=[0, 1, 0]), ScalarRecord(free=[0, 0, 1])],
        free_rank=3,
    )
