"""
Rook placements, rank matrices and the Bruhat order.

Types A, B and C compare rank matrices entrywise. Type D adds a parity
condition on pairs (a, b) whose rectangle [-a, a] x [-b, b] is empty for both
elements. An independent oracle builds the order from reflection covers.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import networkx as nx
import numpy as np
import structlog

from bruhat_orbits.core.exceptions import NotAnInvolutionError, RankMismatchError
from bruhat_orbits.core.indexing import IndexLayout, signed_layout, unsigned_layout
from bruhat_orbits.core.types import CartanType
from bruhat_orbits.weyl.root_system import RootSystem
from bruhat_orbits.weyl.signed_perm import (
    SignedPermutation,
    bfs_lengths,
    enumerate_group,
    reflection,
)

logger = structlog.get_logger()


def combinatorial_layout(n: int, cartan: CartanType) -> IndexLayout:
    """Labels 1..n for type A, 1..n, -n..-1 otherwise."""
    return unsigned_layout(n) if cartan is CartanType.A else signed_layout(n)


@dataclass(frozen=True, eq=False)
class RookPlacement:
    """0/1 matrix X_w with (X_w)[i, j] = 1 iff w(j) = i."""

    layout: IndexLayout
    values: np.ndarray

    def entry(self, row: int, col: int) -> int:
        return int(self.values[self.layout.position(row), self.layout.position(col)])

    def rooks(self) -> list[tuple[int, int]]:
        """Rook cells as (row label, column label), by column."""
        cells = [(int(r), int(c)) for r, c in np.argwhere(self.values)]
        cells.sort(key=lambda cell: cell[1])
        return [(self.layout.label(r), self.layout.label(c)) for r, c in cells]


@dataclass(frozen=True, eq=False)
class RankMatrix:
    """South-West rook counts: entry (i, j) counts rooks in rows >= i and columns <= j."""

    layout: IndexLayout
    values: np.ndarray

    def entry(self, row: int, col: int) -> int:
        return int(self.values[self.layout.position(row), self.layout.position(col)])

    def star(self) -> RankMatrix:
        """Strictly-lower truncation: entries on and above the diagonal are zeroed."""
        return RankMatrix(self.layout, np.tril(self.values, k=-1))

    def __le__(self, other: RankMatrix) -> bool:
        return bool(np.all(self.values <= other.values))

    def to_rows(self) -> list[list[int]]:
        return [[int(v) for v in row] for row in self.values]


def rook_matrix(w: SignedPermutation) -> RookPlacement:
    layout = combinatorial_layout(w.n, w.cartan)
    values = np.zeros((layout.size, layout.size), dtype=np.int64)
    for col in layout.labels:
        values[layout.position(w(col)), layout.position(col)] = 1
    return RookPlacement(layout, values)


def rank_matrix(w: SignedPermutation) -> RankMatrix:
    rooks = rook_matrix(w)
    from_bottom = np.flip(np.cumsum(np.flip(rooks.values, axis=0), axis=0), axis=0)
    return RankMatrix(rooks.layout, np.cumsum(from_bottom, axis=1))


def rank_matrix_star(w: SignedPermutation) -> RankMatrix:
    return rank_matrix(w).star()


def _check_same_group(v: SignedPermutation, w: SignedPermutation) -> None:
    if v.n != w.n or v.weyl_tag != w.weyl_tag:
        raise RankMismatchError(v.describe(), w.describe())


def empty_rectangle(w: SignedPermutation, a: int, b: int) -> bool:
    """True iff no i in [+-n] has |i| >= b and |w(i)| >= a."""
    return not any(i >= b and abs(w(i)) >= a for i in range(1, w.n + 1))


@dataclass(frozen=True)
class BruhatComparison:
    """Outcome of a Bruhat comparison with the first failing witness."""

    leq: bool
    entry: tuple[int, int] | None = None
    parity_pair: tuple[int, int] | None = None

    def witness(self) -> dict[str, object] | None:
        if self.entry is not None:
            return {"kind": "rank_entry", "row": self.entry[0], "col": self.entry[1]}
        if self.parity_pair is not None:
            return {"kind": "parity", "a": self.parity_pair[0], "b": self.parity_pair[1]}
        return None


def parity_violations(v: SignedPermutation, w: SignedPermutation) -> list[tuple[int, int]]:
    """Every (a, b) at which the type D parity condition fails."""
    _check_same_group(v, w)
    rank_v, rank_w = rank_matrix(v), rank_matrix(w)
    n = v.n
    failures: list[tuple[int, int]] = []
    # a = 1 or b = 1 never gives an empty rectangle
    for a in range(2, n + 1):
        for b in range(2, n + 1):
            if not (empty_rectangle(v, a, b) and empty_rectangle(w, a, b)):
                continue
            row = -(a - 1)
            if rank_v.entry(row, b - 1) != rank_w.entry(row, b - 1):
                continue
            if (rank_v.entry(row, n) - rank_w.entry(row, n)) % 2:
                failures.append((a, b))
    return failures


def compare_bruhat(v: SignedPermutation, w: SignedPermutation) -> BruhatComparison:
    _check_same_group(v, w)
    rank_v, rank_w = rank_matrix(v), rank_matrix(w)
    bad = np.argwhere(rank_v.values > rank_w.values)
    if len(bad):
        r, c = (int(x) for x in bad[0])
        return BruhatComparison(False, entry=(rank_v.layout.label(r), rank_v.layout.label(c)))
    if v.cartan is CartanType.D:
        failures = parity_violations(v, w)
        if failures:
            return BruhatComparison(False, parity_pair=failures[0])
    return BruhatComparison(True)


def leq_bruhat(v: SignedPermutation, w: SignedPermutation) -> bool:
    return compare_bruhat(v, w).leq


def leq_star(v: SignedPermutation, w: SignedPermutation) -> bool:
    """Entrywise comparison of the strictly-lower rank matrices of two involutions."""
    for x in (v, w):
        if not x.is_involution():
            raise NotAnInvolutionError(x.images)
    _check_same_group(v, w)
    return rank_matrix_star(v) <= rank_matrix_star(w)


# =============================================================================
# Oracle
# =============================================================================


@lru_cache(maxsize=8)
def bruhat_graph(n: int, cartan: CartanType) -> nx.DiGraph:
    """Covers w -> w t over all reflections t with l(w t) = l(w) - 1."""
    lengths = bfs_lengths(n, cartan)
    reflections = [reflection(root, n, cartan) for root in RootSystem(cartan, n).positive_roots]
    graph = nx.DiGraph()
    for w in enumerate_group(n, cartan):
        graph.add_node(w)
        for t in reflections:
            u = w.compose(t)
            if lengths[u] == lengths[w] - 1:
                graph.add_edge(w, u)
    logger.debug("Bruhat graph built", cartan=cartan.value, n=n, edges=graph.number_of_edges())
    return graph


@lru_cache(maxsize=8)
def _lower_sets(
    n: int, cartan: CartanType
) -> dict[SignedPermutation, frozenset[SignedPermutation]]:
    graph = bruhat_graph(n, cartan)
    return {w: frozenset(nx.descendants(graph, w)) | {w} for w in graph.nodes}


def bruhat_oracle(v: SignedPermutation, w: SignedPermutation) -> bool:
    """Bruhat order as the reflexive-transitive closure of reflection covers."""
    _check_same_group(v, w)
    lower = _lower_sets(w.n, w.cartan)
    return v.with_cartan(w.cartan) in lower[w]
