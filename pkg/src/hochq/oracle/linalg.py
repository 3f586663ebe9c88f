"""Sparse exact linear algebra over a cyclotomic field.

Matrices are stored as dict-of-dicts ``{row: {col: value}}`` holding only
nonzero entries, in the manner of sympy's sparse domain matrices, with
`CyclotomicNumber` entries sharing one field order.
"""

from __future__ import annotations

from collections.abc import Mapping, Sequence
from dataclasses import dataclass

from hochq.arithmetic.cyclotomic import CyclotomicNumber
from hochq.errors import StructuralError

Rows = dict[int, dict[int, CyclotomicNumber]]


class FieldMatrix:
    """rows x cols matrix over Q(zeta_order)."""

    __slots__ = ("rows", "cols", "order", "_data")

    def __init__(self, rows: int, cols: int, order: int,
                 data: Mapping[int, Mapping[int, CyclotomicNumber]] | None = None) -> None:
        self.rows = rows
        self.cols = cols
        self.order = order
        self._data: Rows = {}
        for i, row in (data or {}).items():
            kept = {}
            for j, value in row.items():
                if value.order != order:
                    raise StructuralError(
                        f"entry ({i}, {j}) lies in Q(zeta_{value.order}), expected Q(zeta_{order})"
                    )
                if not value.is_zero():
                    kept[j] = value
            if kept:
                self._data[i] = kept

    @classmethod
    def zeros(cls, rows: int, cols: int, order: int) -> FieldMatrix:
        return cls(rows, cols, order)

    @classmethod
    def identity(cls, size: int, order: int) -> FieldMatrix:
        one = CyclotomicNumber.one(order)
        return cls(size, size, order, {i: {i: one} for i in range(size)})

    @classmethod
    def from_dense(cls, entries: Sequence[Sequence[CyclotomicNumber]], order: int) -> FieldMatrix:
        rows = len(entries)
        cols = len(entries[0]) if rows else 0
        return cls(rows, cols, order, {
            i: {j: value for j, value in enumerate(row)} for i, row in enumerate(entries)
        })

    def get(self, i: int, j: int) -> CyclotomicNumber:
        return self._data.get(i, {}).get(j) or CyclotomicNumber.zero(self.order)

    def to_rows(self) -> Rows:
        return {i: dict(row) for i, row in self._data.items()}

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def is_zero(self) -> bool:
        return not self._data

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FieldMatrix):
            return NotImplemented
        return self.shape == other.shape and self._data == other._data

    def __add__(self, other: FieldMatrix) -> FieldMatrix:
        self._check_same_shape(other)
        data = self.to_rows()
        for i, row in other._data.items():
            target = data.setdefault(i, {})
            for j, value in row.items():
                current = target.get(j)
                target[j] = value if current is None else current + value
        return FieldMatrix(self.rows, self.cols, self.order, data)

    def __neg__(self) -> FieldMatrix:
        return FieldMatrix(self.rows, self.cols, self.order, {
            i: {j: -v for j, v in row.items()} for i, row in self._data.items()
        })

    def __sub__(self, other: FieldMatrix) -> FieldMatrix:
        return self + (-other)

    def scale(self, factor: CyclotomicNumber) -> FieldMatrix:
        return FieldMatrix(self.rows, self.cols, self.order, {
            i: {j: v * factor for j, v in row.items()} for i, row in self._data.items()
        })

    def __matmul__(self, other: FieldMatrix) -> FieldMatrix:
        if self.cols != other.rows:
            raise StructuralError(f"cannot multiply {self.shape} by {other.shape}")
        data: Rows = {}
        for i, row in self._data.items():
            out: dict[int, CyclotomicNumber] = {}
            for k, a in row.items():
                for j, b in other._data.get(k, {}).items():
                    term = a * b
                    current = out.get(j)
                    out[j] = term if current is None else current + term
            data[i] = out
        return FieldMatrix(self.rows, other.cols, self.order, data)

    def apply(self, vector: Sequence[CyclotomicNumber]) -> list[CyclotomicNumber]:
        if len(vector) != self.cols:
            raise StructuralError(f"vector of length {len(vector)} for {self.cols} columns")
        result = [CyclotomicNumber.zero(self.order) for _ in range(self.rows)]
        for i, row in self._data.items():
            for j, value in row.items():
                result[i] = result[i] + value * vector[j]
        return result

    def _check_same_shape(self, other: FieldMatrix) -> None:
        if self.shape != other.shape or self.order != other.order:
            raise StructuralError(
                f"shape/field mismatch: {self.shape} over {self.order} vs "
                f"{other.shape} over {other.order}"
            )

    def __repr__(self) -> str:
        return f"FieldMatrix({self.rows}x{self.cols} over Q(zeta_{self.order}), nnz={self.nnz})"

    @property
    def nnz(self) -> int:
        return sum(len(row) for row in self._data.values())


def rref(matrix: FieldMatrix) -> tuple[Rows, list[int]]:
    """Reduced row echelon form (as sparse rows) and pivot columns.

    The pivot in each column is the first row, in order, with a nonzero entry.
    """
    pending = [dict(row) for _, row in sorted(matrix.to_rows().items())]
    reduced: list[dict[int, CyclotomicNumber]] = []
    pivots: list[int] = []
    for col in range(matrix.cols):
        chosen = next((k for k, row in enumerate(pending) if col in row), None)
        if chosen is None:
            continue
        pivot_row = pending.pop(chosen)
        inv = pivot_row[col].inverse()
        pivot_row = {j: v * inv for j, v in pivot_row.items()}
        for rows in (pending, reduced):
            for k, row in enumerate(rows):
                factor = row.get(col)
                if factor is None:
                    continue
                rows[k] = _axpy(row, pivot_row, factor)
        reduced.append(pivot_row)
        pivots.append(col)
    return dict(enumerate(reduced)), pivots


def _axpy(row: dict[int, CyclotomicNumber], pivot: dict[int, CyclotomicNumber],
          factor: CyclotomicNumber) -> dict[int, CyclotomicNumber]:
    """row - factor * pivot, dropping zeros."""
    out = dict(row)
    for j, value in pivot.items():
        updated = out.get(j, CyclotomicNumber.zero(value.order)) - factor * value
        if updated.is_zero():
            out.pop(j, None)
        else:
            out[j] = updated
    return out


@dataclass(frozen=True)
class RankKernel:
    rank: int
    kernel: list[list[CyclotomicNumber]]


def rank_kernel(matrix: FieldMatrix) -> RankKernel:
    """Rank and a kernel basis (one vector per non-pivot column)."""
    reduced, pivots = rref(matrix)
    zero = CyclotomicNumber.zero(matrix.order)
    one = CyclotomicNumber.one(matrix.order)
    pivot_set = set(pivots)
    kernel = []
    for free in range(matrix.cols):
        if free in pivot_set:
            continue
        vector = [zero] * matrix.cols
        vector[free] = one
        for k, col in enumerate(pivots):
            value = reduced[k].get(free)
            if value is not None:
                vector[col] = -value
        kernel.append(vector)
    return RankKernel(rank=len(pivots), kernel=kernel)


def rank(matrix: FieldMatrix) -> int:
    if matrix.is_zero():
        return 0
    return len(rref(matrix)[1])
