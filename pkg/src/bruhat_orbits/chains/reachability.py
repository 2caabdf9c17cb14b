"""
Chains of admissible pairs and reachability checks over involution posets.

The admissible-pair graph has an edge tau -> sigma whenever (tau, sigma)
matches a table row. Edges are generated from each tau by instantiating the
rows over increasing index assignments, so no quadratic pair scan is needed.
Under the strict policy an edge is kept only when sigma < tau in the Bruhat
order. A claim holds when every sigma strictly below tau is reachable from
tau.
"""

from __future__ import annotations

import itertools
from collections.abc import Iterator, Sequence
from dataclasses import dataclass, field

import networkx as nx
import numpy as np
import structlog

from bruhat_orbits.chains.classification import PairType, collisions
from bruhat_orbits.chains.tables import ALL_ROWS, TableRow, rows_for_table
from bruhat_orbits.core.exceptions import RankLimitError
from bruhat_orbits.core.types import CartanType, EdgePolicy
from bruhat_orbits.weyl.bruhat_order import rank_matrix
from bruhat_orbits.weyl.involution import Involution
from bruhat_orbits.weyl.root_system import Root
from bruhat_orbits.weyl.signed_perm import SignedPermutation, enumerate_involutions

logger = structlog.get_logger()

MAX_BASIS_CHAIN_RANK = 7
MAX_FULL_CHAIN_RANK = 5
MAX_COLLISION_RANK = 4


@dataclass
class ChainReport:
    """A checked pair and, when found, a chain of admissible steps from source to target."""

    source: SignedPermutation
    target: SignedPermutation
    edge_policy: EdgePolicy
    chain: tuple[SignedPermutation, ...] | None = None

    @property
    def reachable(self) -> bool:
        return self.chain is not None

    def describe(self) -> dict[str, object]:
        data: dict[str, object] = {
            "source": self.source.format(),
            "target": self.target.format(),
            "edge_policy": self.edge_policy.value,
        }
        if self.chain is not None:
            data["chain"] = [w.format() for w in self.chain]
        return data


@dataclass
class AdmissibleGraph:
    """Admissible-pair graph over a fixed list of involutions."""

    nodes: list[Involution]
    graph: nx.DiGraph
    ranks: np.ndarray  # stacked rank matrices, one per node
    policy: EdgePolicy
    positions: dict[SignedPermutation, int]
    unordered_edges: list[tuple[SignedPermutation, SignedPermutation, str]] = field(
        default_factory=list
    )

    def index(self, w: SignedPermutation) -> int:
        return self.positions[w]

    def below(self, idx: int) -> np.ndarray:
        """Indices of nodes strictly below node ``idx`` in the Bruhat order."""
        mask = np.all(self.ranks <= self.ranks[idx], axis=(1, 2))
        mask[idx] = False
        return np.flatnonzero(mask)


@dataclass
class ReachabilityReport:
    """Outcome of a chain-existence check over all comparable pairs."""

    claim: str
    n: int
    policy: EdgePolicy
    nodes: int
    edges: int
    pairs_checked: int = 0
    failures: list[ChainReport] = field(default_factory=list)
    chains: list[ChainReport] = field(default_factory=list)
    unordered_edges: int = 0

    @property
    def passed(self) -> bool:
        return not self.failures


# =============================================================================
# Graph construction
# =============================================================================


def involution_nodes(n: int, basis_only: bool) -> list[Involution]:
    """Involutions of C_n, in enumeration order."""
    return [Involution(w) for w in enumerate_involutions(n, CartanType.C, basis_only=basis_only)]


def chain_successors(
    tau: Involution,
    rows: Sequence[TableRow],
    supports: dict[frozenset[Root], Involution],
) -> Iterator[tuple[TableRow, Involution]]:
    """
    Every (row, sigma) such that (tau, sigma) matches ``row``.

    ``supports`` maps each candidate support to its involution; an
    instantiation whose support is not a key is not a valid involution.
    """
    support = tau.support
    for row in rows:
        for indices in itertools.combinations(range(1, tau.n + 1), len(row.chain)):
            sigma_only, tau_only = row.instantiate(dict(zip(row.chain, indices)))
            if not tau_only <= support or sigma_only & support:
                continue
            sigma = supports.get((support - tau_only) | sigma_only)
            if sigma is not None:
                yield row, sigma


def admissible_graph(
    n: int,
    basis_only: bool,
    policy: EdgePolicy = EdgePolicy.STRICT,
    include_doubtful: bool = True,
) -> AdmissibleGraph:
    """Edges from the first table for basis involutions, from every table otherwise."""
    nodes = involution_nodes(n, basis_only)
    rows = rows_for_table(1) if basis_only else ALL_ROWS
    if not include_doubtful:
        rows = tuple(row for row in rows if not row.doubtful)
    supports = {node.support: node for node in nodes}
    ranks = np.stack([rank_matrix(node.perm).values for node in nodes])
    positions = {node.perm: idx for idx, node in enumerate(nodes)}

    graph = nx.DiGraph()
    graph.add_nodes_from(node.perm for node in nodes)
    result = AdmissibleGraph(nodes, graph, ranks, policy, positions)
    for tau in nodes:
        tau_ranks = ranks[positions[tau.perm]]
        for row, sigma in chain_successors(tau, rows, supports):
            below = bool(np.all(ranks[positions[sigma.perm]] <= tau_ranks))
            if not below:
                result.unordered_edges.append((tau.perm, sigma.perm, row.label))
                if policy is EdgePolicy.STRICT:
                    continue
            if graph.has_edge(tau.perm, sigma.perm):
                continue
            graph.add_edge(tau.perm, sigma.perm, type=row.label)

    logger.info(
        "Chain graph built",
        n=n,
        basis_only=basis_only,
        policy=policy.value,
        nodes=graph.number_of_nodes(),
        edges=graph.number_of_edges(),
        unordered_edges=len(result.unordered_edges),
    )
    return result


def find_chain(
    admissible: AdmissibleGraph, source: SignedPermutation, target: SignedPermutation
) -> ChainReport:
    """Shortest chain of admissible steps from ``source`` down to ``target``."""
    report = ChainReport(source, target, admissible.policy)
    try:
        report.chain = tuple(nx.shortest_path(admissible.graph, source, target))
    except nx.NetworkXNoPath:
        pass
    return report


# =============================================================================
# Claims
# =============================================================================


def check_reachability(
    claim: str, admissible: AdmissibleGraph, n: int, include_chains: bool = False
) -> ReachabilityReport:
    """Every sigma < tau must be reachable from tau along graph edges."""
    graph = admissible.graph
    report = ReachabilityReport(
        claim=claim,
        n=n,
        policy=admissible.policy,
        nodes=graph.number_of_nodes(),
        edges=graph.number_of_edges(),
        unordered_edges=len(admissible.unordered_edges),
    )
    for idx, tau in enumerate(admissible.nodes):
        reachable = nx.descendants(graph, tau.perm)
        for low in admissible.below(idx):
            sigma = admissible.nodes[int(low)].perm
            report.pairs_checked += 1
            if sigma not in reachable:
                report.failures.append(ChainReport(tau.perm, sigma, admissible.policy))
            elif include_chains:
                report.chains.append(find_chain(admissible, tau.perm, sigma))
        logger.debug("Source checked", claim=claim, source=str(tau), reachable=len(reachable))

    logger.info(
        "Reachability checked",
        claim=claim,
        n=n,
        pairs_checked=report.pairs_checked,
        failures=len(report.failures),
    )
    return report


def verify_conjecture27(
    n: int, policy: EdgePolicy = EdgePolicy.STRICT, include_chains: bool = False
) -> ReachabilityReport:
    """Basis involutions of C_n are connected downward by basis-admissible steps."""
    if n > MAX_BASIS_CHAIN_RANK:
        raise RankLimitError("conj27", n, MAX_BASIS_CHAIN_RANK)
    admissible = admissible_graph(n, basis_only=True, policy=policy)
    return check_reachability("conj27", admissible, n, include_chains)


def verify_corollary26(
    n: int, policy: EdgePolicy = EdgePolicy.STRICT, include_chains: bool = False
) -> ReachabilityReport:
    """All involutions of C_n are connected downward by admissible steps."""
    if n > MAX_FULL_CHAIN_RANK:
        raise RankLimitError("cor26", n, MAX_FULL_CHAIN_RANK)
    admissible = admissible_graph(n, basis_only=False, policy=policy)
    return check_reachability("cor26", admissible, n, include_chains)


def table_collisions(
    n: int,
) -> list[tuple[SignedPermutation, SignedPermutation, list[PairType]]]:
    """Pairs of I(C_n) claimed by two or more confirmed table rows."""
    if n > MAX_COLLISION_RANK:
        raise RankLimitError("collisions", n, MAX_COLLISION_RANK)
    nodes = involution_nodes(n, basis_only=False)
    found = []
    for tau, sigma in itertools.product(nodes, repeat=2):
        matches = collisions(tau, sigma)
        if matches:
            found.append((tau.perm, sigma.perm, matches))
    logger.info("Table collisions checked", n=n, pairs=len(nodes) ** 2, collisions=len(found))
    return found
