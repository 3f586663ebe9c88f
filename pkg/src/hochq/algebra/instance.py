"""Instance data: the scalar matrix q and the diagonal group action."""

from __future__ import annotations

import logging
from collections import deque
from collections.abc import Mapping, Sequence
from dataclasses import dataclass, field

from hochq.arithmetic.scalars import ScalarExponent, ScalarGroupSpec
from hochq.errors import (
    DiagonalScalarError,
    DuplicateGroupElementError,
    FiniteOrderError,
    GroupClosureError,
    InstanceValidationError,
    InverseSymmetryError,
    StructuralError,
)

logger = logging.getLogger(__name__)

Character = tuple[ScalarExponent, ...]


@dataclass(frozen=True)
class QMatrix:
    """N x N scalars with x_i x_j = q[i][j] x_j x_i (0-based indices)."""

    n: int
    entries: tuple[tuple[ScalarExponent, ...], ...]

    def __post_init__(self) -> None:
        if len(self.entries) != self.n or any(len(row) != self.n for row in self.entries):
            raise StructuralError(f"q must be a {self.n}x{self.n} array")

    def __call__(self, i: int, j: int) -> ScalarExponent:
        return self.entries[i][j]

    @classmethod
    def from_upper(
        cls, spec: ScalarGroupSpec, n: int, upper: Mapping[tuple[int, int], ScalarExponent]
    ) -> QMatrix:
        """Build q from its strictly upper triangle; the rest is forced."""
        rows = [[spec.identity() for _ in range(n)] for _ in range(n)]
        for (i, j), value in upper.items():
            if not 0 <= i < j < n:
                raise StructuralError(f"upper-triangle entry ({i}, {j}) out of range for n={n}")
            rows[i][j] = value
            rows[j][i] = value.inverse()
        return cls(n, tuple(tuple(row) for row in rows))


@dataclass(frozen=True)
class DiagonalGroupSpec:
    """A finite group acting by ^g x_i = lambda_{g,i} x_i, stored as its characters.

    Group elements are referred to by their position in `characters`.
    """

    characters: tuple[Character, ...]
    _index: dict[tuple[int, ...], int] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        index: dict[tuple[int, ...], int] = {}
        for k, chars in enumerate(self.characters):
            index.setdefault(_torsion_vector(chars), k)
        object.__setattr__(self, "_index", index)

    def __len__(self) -> int:
        return len(self.characters)

    @property
    def elements(self) -> range:
        return range(len(self.characters))

    def index_of(self, vector: Sequence[int]) -> int | None:
        return self._index.get(tuple(vector))

    def vector(self, g: int) -> tuple[int, ...]:
        return _torsion_vector(self.characters[g])

    def identity(self) -> int:
        for g, chars in enumerate(self.characters):
            if all(c.is_one() for c in chars):
                return g
        raise GroupClosureError("no identity element", "group")

    def multiply(self, g: int, h: int) -> int:
        order = self.characters[g][0].order if self.characters[g] else 1
        product = tuple(
            (a + b) % order for a, b in zip(self.vector(g), self.vector(h))
        )
        found = self.index_of(product)
        if found is None:
            raise GroupClosureError(f"product of elements {g} and {h} is missing", f"group[{g}]")
        return found

    def inverse(self, g: int) -> int:
        order = self.characters[g][0].order if self.characters[g] else 1
        found = self.index_of(tuple((-a) % order for a in self.vector(g)))
        if found is None:
            raise GroupClosureError(f"inverse of element {g} is missing", f"group[{g}]")
        return found

    @classmethod
    def trivial(cls, spec: ScalarGroupSpec, n: int) -> DiagonalGroupSpec:
        return cls((tuple(spec.identity() for _ in range(n)),))

    @classmethod
    def generated(
        cls, spec: ScalarGroupSpec, n: int, generators: Sequence[Character]
    ) -> DiagonalGroupSpec:
        """Closure of `generators` under products, identity first, then BFS order."""
        for k, gen in enumerate(generators):
            if len(gen) != n:
                raise InstanceValidationError(
                    f"character has length {len(gen)}, expected {n}", f"generators[{k}]"
                )
            for i, value in enumerate(gen):
                if any(value.free):
                    raise FiniteOrderError(
                        "group character must have finite order (zero free part)",
                        f"generators[{k}][{i}]",
                    )
        m = spec.torsion_order
        gen_vectors = [_torsion_vector(gen) for gen in generators]
        start = (0,) * n
        seen = {start: 0}
        order = [start]
        queue = deque([start])
        while queue:
            current = queue.popleft()
            for gen in gen_vectors:
                nxt = tuple((a + b) % m for a, b in zip(current, gen))
                if nxt not in seen:
                    seen[nxt] = len(order)
                    order.append(nxt)
                    queue.append(nxt)
        characters = tuple(tuple(spec.root_of_unity(c) for c in vec) for vec in order)
        logger.debug("Generated group of order %d from %d generators", len(order), len(generators))
        return cls(characters)


def _torsion_vector(chars: Character) -> tuple[int, ...]:
    return tuple(c.torsion for c in chars)


@dataclass(frozen=True)
class QInstance:
    """A validated pair (q, G) over one scalar group."""

    spec: ScalarGroupSpec
    q: QMatrix
    group: DiagonalGroupSpec
    identity: int = field(init=False)
    _table: tuple[tuple[int, ...], ...] = field(init=False, repr=False, compare=False)
    _inverses: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "identity", self.group.identity())
        table = tuple(
            tuple(self.group.multiply(g, h) for h in self.group.elements)
            for g in self.group.elements
        )
        object.__setattr__(self, "_table", table)
        object.__setattr__(
            self, "_inverses", tuple(self.group.inverse(g) for g in self.group.elements)
        )

    @property
    def n(self) -> int:
        return self.q.n

    @property
    def elements(self) -> range:
        return self.group.elements

    @property
    def group_order(self) -> int:
        return len(self.group)

    def qs(self, i: int, j: int) -> ScalarExponent:
        return self.q.entries[i][j]

    def lam(self, g: int, i: int) -> ScalarExponent:
        return self.group.characters[g][i]

    def mul(self, g: int, h: int) -> int:
        return self._table[g][h]

    def inv(self, g: int) -> int:
        return self._inverses[g]

    def check_element(self, g: int) -> None:
        if not 0 <= g < len(self.group):
            raise StructuralError(f"unknown group element {g} (group has {len(self.group)})")

    def max_q_free(self) -> int:
        return max((e.max_free() for row in self.q.entries for e in row), default=0)


def validate_instance(q: QMatrix, group: DiagonalGroupSpec, spec: ScalarGroupSpec) -> QInstance:
    """Check every invariant of (q, G) and return the validated instance.

    Each violation raises its own located `InstanceValidationError` subclass.
    """
    for i in range(q.n):
        for j in range(q.n):
            value = q(i, j)
            if value.order != spec.torsion_order or value.free_rank != spec.free_rank:
                raise InstanceValidationError(
                    "scalar does not belong to the declared scalar group", f"q[{i}][{j}]"
                )
        if not q(i, i).is_one():
            raise DiagonalScalarError("diagonal scalar must be 1", f"q[{i}][{i}]")
    for i in range(q.n):
        for j in range(i + 1, q.n):
            if not (q(i, j) * q(j, i)).is_one():
                raise InverseSymmetryError(
                    f"q[{j}][{i}] must be the inverse of q[{i}][{j}]", f"q[{j}][{i}]"
                )

    seen: dict[tuple[int, ...], int] = {}
    for k, chars in enumerate(group.characters):
        if len(chars) != q.n:
            raise InstanceValidationError(
                f"character has length {len(chars)}, expected {q.n}", f"group[{k}]"
            )
        for i, value in enumerate(chars):
            if value.order != spec.torsion_order or value.free_rank != spec.free_rank:
                raise InstanceValidationError(
                    "character does not belong to the declared scalar group", f"group[{k}][{i}]"
                )
            if any(value.free):
                raise FiniteOrderError(
                    "group character must have finite order (zero free part)", f"group[{k}][{i}]"
                )
        vector = _torsion_vector(chars)
        if vector in seen:
            raise DuplicateGroupElementError(
                f"same character as group[{seen[vector]}]", f"group[{k}]"
            )
        seen[vector] = k

    if not group.characters:
        raise GroupClosureError("group is empty", "group")
    group.identity()
    for g in group.elements:
        group.inverse(g)
        for h in group.elements:
            group.multiply(g, h)

    instance = QInstance(spec=spec, q=q, group=group)
    logger.debug("Validated instance: n=%d, |G|=%d", instance.n, instance.group_order)
    return instance
