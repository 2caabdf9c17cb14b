"""
Exact square matrices indexed by logical labels.

Entries are CycloElement or LaurentPoly values; plain ints and Fractions are
coerced on construction. Products skip zero entries, which keeps the sparse
root vectors and group generators cheap to multiply.
"""

from __future__ import annotations

from collections.abc import Callable, Iterable, Mapping, Sequence
from fractions import Fraction

from bruhat_orbits.algebra import linalg
from bruhat_orbits.algebra.exact_field import (
    ONE,
    ZERO,
    CycloElement,
    LaurentPoly,
    Scalar,
    format_scalar,
    to_scalar,
)
from bruhat_orbits.core.exceptions import ShapeMismatchError
from bruhat_orbits.core.indexing import IndexLayout

Cell = tuple[int, int]


class LieMatrix:
    """Square matrix over exact scalars with rows and columns labelled by ``layout``."""

    __slots__ = ("layout", "_rows")

    def __init__(self, layout: IndexLayout, rows: Sequence[Sequence[object]]) -> None:
        size = layout.size
        if len(rows) != size or any(len(row) != size for row in rows):
            raise ShapeMismatchError(f"expected a {size}x{size} matrix")
        self.layout = layout
        self._rows: tuple[tuple[Scalar, ...], ...] = tuple(
            tuple(to_scalar(entry) for entry in row) for row in rows
        )

    # ------------------------------------------------------------------
    # Constructors
    # ------------------------------------------------------------------

    @classmethod
    def zeros(cls, layout: IndexLayout) -> LieMatrix:
        return cls(layout, [[ZERO] * layout.size for _ in range(layout.size)])

    @classmethod
    def identity(cls, layout: IndexLayout) -> LieMatrix:
        return cls.diagonal(layout, {label: ONE for label in layout.labels})

    @classmethod
    def from_entries(cls, layout: IndexLayout, entries: Mapping[Cell, object]) -> LieMatrix:
        rows: list[list[object]] = [[ZERO] * layout.size for _ in range(layout.size)]
        for (row, col), value in entries.items():
            r, c = layout.position(row), layout.position(col)
            rows[r][c] = to_scalar(rows[r][c]) + to_scalar(value)
        return cls(layout, rows)

    @classmethod
    def unit(cls, layout: IndexLayout, row: int, col: int, value: object = 1) -> LieMatrix:
        return cls.from_entries(layout, {(row, col): value})

    @classmethod
    def diagonal(cls, layout: IndexLayout, values: Mapping[int, object]) -> LieMatrix:
        return cls.from_entries(layout, {(label, label): v for label, v in values.items()})

    # ------------------------------------------------------------------
    # Access
    # ------------------------------------------------------------------

    @property
    def size(self) -> int:
        return self.layout.size

    @property
    def rows(self) -> tuple[tuple[Scalar, ...], ...]:
        return self._rows

    def entry(self, row: int, col: int) -> Scalar:
        return self._rows[self.layout.position(row)][self.layout.position(col)]

    def nonzero_entries(self) -> dict[Cell, Scalar]:
        labels = self.layout.labels
        return {
            (labels[r], labels[c]): value
            for r, row in enumerate(self._rows)
            for c, value in enumerate(row)
            if value
        }

    def submatrix(self, rows: Iterable[int], cols: Iterable[int]) -> list[list[Scalar]]:
        col_positions = [self.layout.position(c) for c in cols]
        return [
            [self._rows[self.layout.position(r)][c] for c in col_positions] for r in rows
        ]

    def _same_layout(self, other: LieMatrix) -> None:
        if self.layout != other.layout:
            raise ShapeMismatchError(
                f"layouts differ: {self.layout.labels} vs {other.layout.labels}"
            )

    # ------------------------------------------------------------------
    # Arithmetic
    # ------------------------------------------------------------------

    def __add__(self, other: LieMatrix) -> LieMatrix:
        self._same_layout(other)
        return LieMatrix(
            self.layout,
            [[a + b for a, b in zip(r1, r2)] for r1, r2 in zip(self._rows, other._rows)],
        )

    def __sub__(self, other: LieMatrix) -> LieMatrix:
        self._same_layout(other)
        return LieMatrix(
            self.layout,
            [[a - b for a, b in zip(r1, r2)] for r1, r2 in zip(self._rows, other._rows)],
        )

    def __neg__(self) -> LieMatrix:
        return LieMatrix(self.layout, [[-a for a in row] for row in self._rows])

    def scale(self, factor: object) -> LieMatrix:
        scalar = to_scalar(factor)
        return LieMatrix(
            self.layout, [[a * scalar if a else ZERO for a in row] for row in self._rows]
        )

    def __mul__(self, other: object) -> LieMatrix:
        if isinstance(other, LieMatrix):
            return self.matmul(other)
        if isinstance(other, (int, Fraction, CycloElement, LaurentPoly)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other: object) -> LieMatrix:
        return self.scale(other)

    def matmul(self, other: LieMatrix) -> LieMatrix:
        self._same_layout(other)
        size = self.size
        other_sparse = [[(c, v) for c, v in enumerate(row) if v] for row in other._rows]
        out: list[list[Scalar]] = [[ZERO] * size for _ in range(size)]
        for r, row in enumerate(self._rows):
            target = out[r]
            for k, a in enumerate(row):
                if not a:
                    continue
                for c, b in other_sparse[k]:
                    target[c] = target[c] + a * b
        return LieMatrix(self.layout, out)

    def bracket(self, other: LieMatrix) -> LieMatrix:
        """Commutator [self, other]."""
        return self.matmul(other) - other.matmul(self)

    def power(self, exponent: int) -> LieMatrix:
        result = LieMatrix.identity(self.layout)
        for _ in range(exponent):
            result = result.matmul(self)
        return result

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LieMatrix):
            return NotImplemented
        return self.layout == other.layout and self._rows == other._rows

    __hash__ = None  # type: ignore[assignment]

    # ------------------------------------------------------------------
    # Structure
    # ------------------------------------------------------------------

    def transpose(self) -> LieMatrix:
        return LieMatrix(self.layout, [list(col) for col in zip(*self._rows)])

    def trace(self) -> Scalar:
        total: Scalar = ZERO
        for i in range(self.size):
            total = total + self._rows[i][i]
        return total

    def low(self) -> LieMatrix:
        """Strictly lower-triangular part."""
        return LieMatrix(
            self.layout,
            [[a if c < r else ZERO for c, a in enumerate(row)] for r, row in enumerate(self._rows)],
        )

    def upper(self) -> LieMatrix:
        """Strictly upper-triangular part."""
        return LieMatrix(
            self.layout,
            [[a if c > r else ZERO for c, a in enumerate(row)] for r, row in enumerate(self._rows)],
        )

    @property
    def is_zero(self) -> bool:
        return not any(a for row in self._rows for a in row)

    def is_upper_triangular(self, strict: bool = False) -> bool:
        return all(
            not a
            for r, row in enumerate(self._rows)
            for c, a in enumerate(row)
            if c < r or (strict and c == r)
        )

    def is_strictly_lower(self) -> bool:
        return all(not a for r, row in enumerate(self._rows) for c, a in enumerate(row) if c >= r)

    def is_diagonal(self) -> bool:
        return all(not a for r, row in enumerate(self._rows) for c, a in enumerate(row) if c != r)

    def is_unitriangular(self) -> bool:
        return self.is_upper_triangular() and all(
            self._rows[i][i] == ONE for i in range(self.size)
        )

    @property
    def shape_tag(self) -> str:
        if self.is_diagonal():
            return "diagonal"
        if self.is_upper_triangular(strict=True):
            return "strictly-upper"
        if self.is_strictly_lower():
            return "strictly-lower"
        return "general"

    def inverse_upper(self) -> LieMatrix:
        """Inverse of an invertible upper-triangular matrix."""
        return LieMatrix(self.layout, linalg.upper_triangular_inverse(self._rows))

    # ------------------------------------------------------------------
    # Laurent specializations
    # ------------------------------------------------------------------

    def _map(self, fn: Callable[[Scalar], Scalar]) -> LieMatrix:
        return LieMatrix(self.layout, [[fn(a) for a in row] for row in self._rows])

    def evaluate_at(self, value: object) -> LieMatrix:
        """Substitute t = value in every Laurent entry."""
        point = CycloElement.coerce(value)
        return self._map(lambda a: a.evaluate(point) if isinstance(a, LaurentPoly) else a)

    def limit_at_zero(self) -> LieMatrix:
        """Entrywise limit t -> 0; raises PoleAtZeroError on a negative power."""
        return self._map(lambda a: a.limit_at_zero() if isinstance(a, LaurentPoly) else a)

    def min_valuation(self) -> int | None:
        valuations = [
            a.valuation
            for row in self._rows
            for a in row
            if isinstance(a, LaurentPoly) and not a.is_zero
        ]
        constants = any(a for row in self._rows for a in row if isinstance(a, CycloElement))
        values = [v for v in valuations if v is not None] + ([0] if constants else [])
        return min(values) if values else None

    # ------------------------------------------------------------------
    # Rendering
    # ------------------------------------------------------------------

    def to_strings(self) -> list[list[str]]:
        return [[format_scalar(a) for a in row] for row in self._rows]

    def __repr__(self) -> str:
        return f"LieMatrix({self.layout.labels}, {self.to_strings()})"
