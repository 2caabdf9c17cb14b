"""Logical-to-physical index maps shared by rank matrices and Lie matrices.

Rows and columns are labelled 1, ..., n, 0, -n, ..., -1 (the 0 only for the
odd orthogonal matrices of type B); physical positions count from 0 in that
order, so "South-West" means larger row position and smaller column position.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache

from bruhat_orbits.core.exceptions import ShapeMismatchError


@dataclass(frozen=True)
class IndexLayout:
    """Ordered labels of a square matrix."""

    n: int
    labels: tuple[int, ...]

    @cached_property
    def _positions(self) -> dict[int, int]:
        return {label: pos for pos, label in enumerate(self.labels)}

    @property
    def size(self) -> int:
        return len(self.labels)

    def position(self, label: int) -> int:
        try:
            return self._positions[label]
        except KeyError:
            raise ShapeMismatchError(f"label {label} not in layout {self.labels}") from None

    def label(self, position: int) -> int:
        return self.labels[position]

    def __contains__(self, label: object) -> bool:
        return label in self._positions

    def is_strictly_lower(self, row: int, col: int) -> bool:
        """Return True when cell (row, col) lies strictly below the diagonal."""
        return self.position(row) > self.position(col)

    def rows_from(self, row: int) -> tuple[int, ...]:
        """Labels from ``row`` down to the last row, in display order."""
        return self.labels[self.position(row) :]

    def columns_to(self, col: int) -> tuple[int, ...]:
        """Labels from the first column up to ``col``, in display order."""
        return self.labels[: self.position(col) + 1]

    def strictly_lower_cells(self) -> list[tuple[int, int]]:
        return [
            (self.labels[r], self.labels[c]) for r in range(self.size) for c in range(r)
        ]


@lru_cache(maxsize=None)
def unsigned_layout(n: int) -> IndexLayout:
    """Labels 1, ..., n (type A)."""
    return IndexLayout(n, tuple(range(1, n + 1)))


@lru_cache(maxsize=None)
def signed_layout(n: int, with_zero: bool = False) -> IndexLayout:
    """Labels 1, ..., n, [0,] -n, ..., -1."""
    middle = (0,) if with_zero else ()
    return IndexLayout(n, tuple(range(1, n + 1)) + middle + tuple(range(-n, 0)))
