"""
Signed permutations realizing the Weyl groups of types A, B/C and D.

Only the images w(1), ..., w(n) are stored; w(-i) = -w(i) is implied.
"""

from __future__ import annotations

import itertools
from collections.abc import Iterator
from dataclasses import dataclass
from functools import lru_cache

import networkx as nx
import structlog

from bruhat_orbits.core.exceptions import (
    EnumerationLimitError,
    InvalidPermutationError,
    RankMismatchError,
)
from bruhat_orbits.core.types import CartanType
from bruhat_orbits.weyl.root_system import Root, RootKind, RootSystem

logger = structlog.get_logger()

MAX_ENUMERATION_RANK = 8
MAX_ORACLE_RANK = 7


@dataclass(frozen=True)
class SignedPermutation:
    """Element of W(A_{n-1}), W(B_n) = W(C_n) or W(D_n)."""

    images: tuple[int, ...]
    cartan: CartanType = CartanType.B

    def __post_init__(self) -> None:
        n = len(self.images)
        if n == 0:
            raise InvalidPermutationError(self.images, "rank must be positive")
        if sorted(abs(v) for v in self.images) != list(range(1, n + 1)):
            raise InvalidPermutationError(self.images, "absolute values are not a permutation")
        negatives = self.sign_changes
        if self.cartan is CartanType.A and negatives:
            raise InvalidPermutationError(self.images, "type A images must be positive")
        if self.cartan is CartanType.D and negatives % 2:
            raise InvalidPermutationError(self.images, "type D needs an even sign count")

    # ------------------------------------------------------------------
    # Constructors
    # ------------------------------------------------------------------

    @classmethod
    def identity(cls, n: int, cartan: CartanType = CartanType.B) -> SignedPermutation:
        return cls(tuple(range(1, n + 1)), cartan)

    @classmethod
    def longest_element(cls, n: int, cartan: CartanType = CartanType.B) -> SignedPermutation:
        if cartan is CartanType.A:
            return cls(tuple(range(n, 0, -1)), cartan)
        if cartan is CartanType.D and n % 2:
            return cls(tuple(-i for i in range(1, n)) + (n,), cartan)
        return cls(tuple(-i for i in range(1, n + 1)), cartan)

    @classmethod
    def parse(cls, text: str, cartan: CartanType = CartanType.B) -> SignedPermutation:
        """Parse comma-separated images such as ``-5,2,4,3,-1``."""
        try:
            images = tuple(int(part) for part in text.replace(" ", "").split(",") if part)
        except ValueError:
            raise InvalidPermutationError((), f"cannot parse images from '{text}'") from None
        return cls(images, cartan)

    # ------------------------------------------------------------------
    # Group structure
    # ------------------------------------------------------------------

    @property
    def n(self) -> int:
        return len(self.images)

    @property
    def weyl_tag(self) -> str:
        return self.cartan.weyl_tag

    @property
    def sign_changes(self) -> int:
        return sum(1 for v in self.images if v < 0)

    def __call__(self, i: int) -> int:
        if i > 0:
            return self.images[i - 1]
        if i < 0:
            return -self.images[-i - 1]
        return 0

    def _check_compatible(self, other: SignedPermutation) -> None:
        if self.n != other.n or self.weyl_tag != other.weyl_tag:
            raise RankMismatchError(self.describe(), other.describe())

    def compose(self, other: SignedPermutation) -> SignedPermutation:
        """(self o other)(i) = self(other(i)); the result keeps self's Cartan type."""
        self._check_compatible(other)
        return SignedPermutation(tuple(self(v) for v in other.images), self.cartan)

    def __mul__(self, other: SignedPermutation) -> SignedPermutation:
        return self.compose(other)

    def inverse(self) -> SignedPermutation:
        images = [0] * self.n
        for i, v in enumerate(self.images, start=1):
            images[abs(v) - 1] = i if v > 0 else -i
        return SignedPermutation(tuple(images), self.cartan)

    def is_identity(self) -> bool:
        return all(v == i for i, v in enumerate(self.images, start=1))

    def is_involution(self) -> bool:
        return all(self(v) == i for i, v in enumerate(self.images, start=1))

    def with_cartan(self, cartan: CartanType) -> SignedPermutation:
        return SignedPermutation(self.images, cartan)

    # ------------------------------------------------------------------
    # Length
    # ------------------------------------------------------------------

    def _key(self, value: int) -> int:
        # order 1 < ... < n < -n < ... < -1
        return value if value > 0 else 2 * self.n + 1 + value

    def length(self) -> int:
        """Coxeter length from inversion statistics in the order 1 < ... < n < -n < ... < -1."""
        n = self.n
        keys = [self._key(v) for v in self.images]
        inversions = sum(1 for i in range(n) for j in range(i + 1, n) if keys[i] > keys[j])
        if self.cartan is CartanType.A:
            return inversions
        mirrored = [self._key(-v) for v in self.images]
        inversions += sum(1 for i in range(n) for j in range(i + 1, n) if keys[i] > mirrored[j])
        if self.cartan in (CartanType.B, CartanType.C):
            inversions += self.sign_changes
        return inversions

    # ------------------------------------------------------------------
    # Rendering
    # ------------------------------------------------------------------

    def format(self) -> str:
        return ",".join(str(v) for v in self.images)

    def describe(self) -> str:
        return f"{self.cartan.value}_{self.n}({self.format()})"

    def __str__(self) -> str:
        return self.format()


def reflection(root: Root, n: int, cartan: CartanType) -> SignedPermutation:
    """The reflection s_alpha as a signed permutation."""
    RootSystem(cartan, n).require(root)
    images = list(range(1, n + 1))
    i, j = root.i, root.j
    if root.kind is RootKind.DIFF:
        images[i - 1], images[j - 1] = j, i
    elif root.kind is RootKind.SUM:
        images[i - 1], images[j - 1] = -j, -i
    else:
        images[i - 1] = -i
    return SignedPermutation(tuple(images), cartan)


def simple_reflections(n: int, cartan: CartanType) -> list[SignedPermutation]:
    return [reflection(root, n, cartan) for root in RootSystem(cartan, n).simple_roots]


def group_order(n: int, cartan: CartanType) -> int:
    factorial = 1
    for k in range(2, n + 1):
        factorial *= k
    if cartan is CartanType.A:
        return factorial
    if cartan is CartanType.D:
        return factorial * 2 ** (n - 1)
    return factorial * 2**n


def enumerate_group(n: int, cartan: CartanType) -> Iterator[SignedPermutation]:
    """Every element exactly once."""
    if n > MAX_ENUMERATION_RANK:
        raise EnumerationLimitError(n, MAX_ENUMERATION_RANK)
    for perm in itertools.permutations(range(1, n + 1)):
        if cartan is CartanType.A:
            yield SignedPermutation(perm, cartan)
            continue
        for signs in itertools.product((1, -1), repeat=n):
            if cartan is CartanType.D and signs.count(-1) % 2:
                continue
            yield SignedPermutation(tuple(s * v for s, v in zip(signs, perm)), cartan)


def enumerate_involutions(
    n: int, cartan: CartanType, basis_only: bool = False
) -> Iterator[SignedPermutation]:
    """
    Involutions, generated by pairing off the smallest unassigned index.

    Each index is fixed, sent to its negative (not for basis involutions),
    or paired with a larger index j as i <-> j or i <-> -j.
    """
    if n > MAX_ENUMERATION_RANK:
        raise EnumerationLimitError(n, MAX_ENUMERATION_RANK)
    signed = cartan.is_signed
    images = [0] * (n + 1)

    def extend(start: int) -> Iterator[tuple[int, ...]]:
        i = next((k for k in range(start, n + 1) if images[k] == 0), None)
        if i is None:
            yield tuple(images[1:])
            return
        images[i] = i
        yield from extend(i + 1)
        if signed and not basis_only:
            images[i] = -i
            yield from extend(i + 1)
        for j in range(i + 1, n + 1):
            if images[j]:
                continue
            images[i], images[j] = j, i
            yield from extend(i + 1)
            if signed:
                images[i], images[j] = -j, -i
                yield from extend(i + 1)
            images[j] = 0
        images[i] = 0

    for result in extend(1):
        if cartan is CartanType.D and sum(1 for v in result if v < 0) % 2:
            continue
        yield SignedPermutation(result, cartan)


@lru_cache(maxsize=16)
def cayley_graph(n: int, cartan: CartanType) -> nx.Graph:
    """Cayley graph on the simple reflections (right multiplication)."""
    if n > MAX_ORACLE_RANK:
        raise EnumerationLimitError(n, MAX_ORACLE_RANK)
    generators = simple_reflections(n, cartan)
    graph = nx.Graph()
    for w in enumerate_group(n, cartan):
        graph.add_node(w)
        for s in generators:
            graph.add_edge(w, w.compose(s))
    logger.debug("Cayley graph built", cartan=cartan.value, n=n, nodes=graph.number_of_nodes())
    return graph


@lru_cache(maxsize=16)
def bfs_lengths(n: int, cartan: CartanType) -> dict[SignedPermutation, int]:
    graph = cayley_graph(n, cartan)
    return dict(nx.single_source_shortest_path_length(graph, SignedPermutation.identity(n, cartan)))


def bfs_length_oracle(w: SignedPermutation) -> int:
    """Graph distance from the identity in the Cayley graph."""
    return bfs_lengths(w.n, w.cartan)[w]
