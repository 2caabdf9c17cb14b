"""
Exporters for rank matrices, Lie matrices and Bruhat posets.

Rank matrices go out as CSV with the row and column labels in the first
column and first row. Posets go out as DOT text describing the Hasse
diagram, which is the transitive reduction of the order relation.
"""

from __future__ import annotations

import csv
import io

import networkx as nx
import structlog

from bruhat_orbits.core.types import CartanType
from bruhat_orbits.lie.lie_matrix import LieMatrix
from bruhat_orbits.weyl.bruhat_order import RankMatrix, leq_bruhat
from bruhat_orbits.weyl.signed_perm import SignedPermutation, enumerate_involutions

logger = structlog.get_logger()


def rank_matrix_csv(matrix: RankMatrix) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    labels = matrix.layout.labels
    writer.writerow(["", *labels])
    for label, row in zip(labels, matrix.to_rows()):
        writer.writerow([label, *row])
    return buffer.getvalue()


def lie_matrix_rows(matrix: LieMatrix) -> dict[str, object]:
    """JSON-ready view: labels plus canonical scalar strings."""
    return {"labels": list(matrix.layout.labels), "rows": matrix.to_strings()}


def hasse_diagram(n: int, cartan: CartanType, basis_only: bool = True) -> nx.DiGraph:
    """
    Cover relations of the Bruhat order on basis involutions (or on all involutions).

    Edges point from the larger element to the one it covers.
    """
    elements = list(enumerate_involutions(n, cartan, basis_only=basis_only))
    order = nx.DiGraph()
    order.add_nodes_from(elements)
    for v in elements:
        for w in elements:
            if v != w and leq_bruhat(v, w):
                order.add_edge(w, v)
    hasse = nx.transitive_reduction(order)
    hasse.add_nodes_from(elements)
    logger.debug("Hasse diagram built", n=n, cartan=cartan.value, covers=hasse.number_of_edges())
    return hasse


def _node_id(w: SignedPermutation) -> str:
    return f'"{w.format()}"'


def to_dot(graph: nx.DiGraph, name: str = "bruhat") -> str:
    """DOT text with nodes listed by length, then lexicographically."""
    nodes = sorted(graph.nodes, key=lambda w: (w.length(), w.images))
    lines = [f"digraph {name} {{", "  rankdir=BT;"]
    lines += [f"  {_node_id(w)} [label={_node_id(w)}];" for w in nodes]
    edges = sorted(graph.edges, key=lambda e: ((e[1].length(), e[1].images), e[0].images))
    lines += [f"  {_node_id(low)} -> {_node_id(high)};" for high, low in edges]
    lines.append("}")
    return "\n".join(lines) + "\n"
