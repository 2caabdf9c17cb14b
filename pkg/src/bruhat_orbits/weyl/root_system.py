"""
Root systems of the classical types A, B, C and D.

Roots are symbolic (kind plus indices) and expose their coordinate vectors
in the standard basis eps_1, ..., eps_n on demand.
"""

from __future__ import annotations

import re
from collections.abc import Iterable
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import cached_property
from typing import TYPE_CHECKING

from bruhat_orbits.core.exceptions import RootNotInSystemError, RootParseError, RootSystemError
from bruhat_orbits.core.types import CartanType

if TYPE_CHECKING:
    from bruhat_orbits.weyl.signed_perm import SignedPermutation

_ROOT_PATTERN = re.compile(r"^\s*(2)?\s*e(\d+)\s*(?:([+-])\s*e(\d+))?\s*$")


class RootKind(str, Enum):
    """Shape of a root in the standard basis."""

    DIFF = "diff"  # eps_i - eps_j
    SUM = "sum"  # eps_i + eps_j
    SHORT = "short"  # eps_i (type B)
    LONG = "long"  # 2 eps_i (type C)

    @property
    def order(self) -> int:
        return _KIND_ORDER[self]


_KIND_ORDER = {RootKind.DIFF: 0, RootKind.SUM: 1, RootKind.SHORT: 2, RootKind.LONG: 2}


@dataclass(frozen=True)
class Root:
    """A root, positive unless ``negative`` is set."""

    kind: RootKind
    i: int
    j: int = 0
    negative: bool = False

    def __post_init__(self) -> None:
        two_index = self.kind in (RootKind.DIFF, RootKind.SUM)
        valid = self.i >= 1 and (self.i < self.j if two_index else self.j == 0)
        if not valid:
            raise RootParseError(f"{self.kind.value}({self.i}, {self.j})")

    # ------------------------------------------------------------------
    # Constructors
    # ------------------------------------------------------------------

    @classmethod
    def diff(cls, i: int, j: int) -> Root:
        return cls(RootKind.DIFF, i, j)

    @classmethod
    def sum(cls, i: int, j: int) -> Root:
        return cls(RootKind.SUM, i, j)

    @classmethod
    def short(cls, i: int) -> Root:
        return cls(RootKind.SHORT, i)

    @classmethod
    def long(cls, i: int) -> Root:
        return cls(RootKind.LONG, i)

    @classmethod
    def parse(cls, text: str) -> Root:
        """Parse ``e1-e2``, ``e1+e5``, ``e3`` or ``2e4``."""
        match = _ROOT_PATTERN.match(text)
        if match is None:
            raise RootParseError(text)
        doubled, first, sign, second = match.groups()
        i = int(first)
        try:
            if sign is None:
                return cls.long(i) if doubled else cls.short(i)
            if doubled:
                raise RootParseError(text)
            kind = RootKind.DIFF if sign == "-" else RootKind.SUM
            return cls(kind, i, int(second))
        except RootParseError:
            raise RootParseError(text) from None

    @classmethod
    def parse_many(cls, text: str) -> list[Root]:
        """Comma-separated roots; the empty string is the empty set."""
        return [cls.parse(part) for part in text.split(",") if part.strip()]

    # ------------------------------------------------------------------
    # Views
    # ------------------------------------------------------------------

    @property
    def indices(self) -> tuple[int, ...]:
        return (self.i, self.j) if self.j else (self.i,)

    @property
    def positive(self) -> Root:
        return Root(self.kind, self.i, self.j) if self.negative else self

    def __neg__(self) -> Root:
        return Root(self.kind, self.i, self.j, not self.negative)

    def vector(self, n: int) -> tuple[int, ...]:
        coords = [0] * n
        if self.kind is RootKind.DIFF:
            coords[self.i - 1], coords[self.j - 1] = 1, -1
        elif self.kind is RootKind.SUM:
            coords[self.i - 1], coords[self.j - 1] = 1, 1
        elif self.kind is RootKind.SHORT:
            coords[self.i - 1] = 1
        else:
            coords[self.i - 1] = 2
        if self.negative:
            return tuple(-c for c in coords)
        return tuple(coords)

    def sort_key(self) -> tuple[int, int, int, int]:
        """Differences, then sums, then one-index roots, each lexicographic."""
        return (int(self.negative), self.kind.order, self.i, self.j)

    def format(self) -> str:
        if self.kind is RootKind.DIFF:
            text = f"e{self.i}-e{self.j}"
        elif self.kind is RootKind.SUM:
            text = f"e{self.i}+e{self.j}"
        elif self.kind is RootKind.SHORT:
            text = f"e{self.i}"
        else:
            text = f"2e{self.i}"
        return f"-({text})" if self.negative else text

    def __str__(self) -> str:
        return self.format()


def sorted_roots(roots: Iterable[Root]) -> list[Root]:
    return sorted(roots, key=Root.sort_key)


def format_roots(roots: Iterable[Root]) -> list[str]:
    return [root.format() for root in sorted_roots(roots)]


@dataclass(frozen=True)
class RootSystem:
    """Root system of type ``cartan`` and rank ``n``; type A here is A_{n-1} on n letters."""

    cartan: CartanType
    n: int

    def __post_init__(self) -> None:
        minimum = 2 if self.cartan is CartanType.D else 1
        if self.n < minimum:
            raise RootSystemError(f"{self.cartan.value}_{self.n} needs rank >= {minimum}")

    @property
    def name(self) -> str:
        return f"{self.cartan.value}_{self.n}"

    @cached_property
    def positive_roots(self) -> tuple[Root, ...]:
        n = self.n
        roots = [Root.diff(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
        if self.cartan is not CartanType.A:
            roots += [Root.sum(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
        if self.cartan is CartanType.B:
            roots += [Root.short(i) for i in range(1, n + 1)]
        elif self.cartan is CartanType.C:
            roots += [Root.long(i) for i in range(1, n + 1)]
        return tuple(roots)

    @cached_property
    def roots(self) -> tuple[Root, ...]:
        """All roots, positive ones first."""
        return self.positive_roots + tuple(-root for root in self.positive_roots)

    @cached_property
    def simple_roots(self) -> tuple[Root, ...]:
        n = self.n
        simple = [Root.diff(k, k + 1) for k in range(1, n)]
        if self.cartan is CartanType.B:
            simple.append(Root.short(n))
        elif self.cartan is CartanType.C:
            simple.append(Root.long(n))
        elif self.cartan is CartanType.D:
            simple.append(Root.sum(n - 1, n))
        return tuple(simple)

    @cached_property
    def _vectors(self) -> frozenset[tuple[int, ...]]:
        return frozenset(root.vector(self.n) for root in self.roots)

    def __contains__(self, root: object) -> bool:
        if not isinstance(root, Root):
            return False
        if max(root.indices) > self.n:
            return False
        return root.positive in self.positive_roots

    def require(self, root: Root) -> Root:
        """Return ``root`` if it is a positive root of this system."""
        if root.negative or root not in self:
            raise RootNotInSystemError(root.format(), self.name)
        return root

    def is_root_vector(self, vector: tuple[int, ...]) -> bool:
        return vector in self._vectors

    # ------------------------------------------------------------------
    # Predicates
    # ------------------------------------------------------------------

    def inner(self, alpha: Root, beta: Root) -> int:
        return sum(a * b for a, b in zip(alpha.vector(self.n), beta.vector(self.n)))

    def orthogonal(self, alpha: Root, beta: Root) -> bool:
        return self.inner(alpha, beta) == 0

    def strongly_orthogonal(self, alpha: Root, beta: Root) -> bool:
        """Neither alpha + beta nor alpha - beta is a root."""
        a, b = alpha.vector(self.n), beta.vector(self.n)
        total = tuple(x + y for x, y in zip(a, b))
        difference = tuple(x - y for x, y in zip(a, b))
        return not (self.is_root_vector(total) or self.is_root_vector(difference))

    def simple_coordinates(self, vector: tuple[int, ...]) -> tuple[Fraction, ...]:
        """Coordinates of ``vector`` in the basis of simple roots."""
        n = self.n
        prefix = [Fraction(0)]
        for value in vector:
            prefix.append(prefix[-1] + value)
        if self.cartan is CartanType.A:
            if prefix[n] != 0:
                raise RootNotInSystemError(str(vector), "root lattice of " + self.name)
            return tuple(prefix[1:n])
        coords = list(prefix[1 : n + 1])
        if self.cartan is CartanType.C:
            coords[n - 1] = prefix[n] / 2
        elif self.cartan is CartanType.D:
            coords[n - 2] = (prefix[n - 1] - vector[n - 1]) / 2
            coords[n - 1] = prefix[n] / 2
        return tuple(coords)

    def height(self, root: Root) -> int:
        return int(sum(self.simple_coordinates(root.vector(self.n))))

    def natural_order_leq(self, alpha: Root, beta: Root) -> bool:
        """True iff beta - alpha is zero or a sum of positive roots."""
        a, b = alpha.vector(self.n), beta.vector(self.n)
        gap = tuple(y - x for x, y in zip(a, b))
        return all(c >= 0 for c in self.simple_coordinates(gap))

    def reflections(self) -> list[SignedPermutation]:
        """Reflections s_alpha over all positive roots, as signed permutations."""
        from bruhat_orbits.weyl.signed_perm import reflection

        return [reflection(root, self.n, self.cartan) for root in self.positive_roots]
