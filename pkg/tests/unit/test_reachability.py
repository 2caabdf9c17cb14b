import pytest

from bruhat_orbits.chains.reachability import (
    admissible_graph,
    find_chain,
    involution_nodes,
    table_collisions,
    verify_conjecture27,
    verify_corollary26,
)
from bruhat_orbits.core.exceptions import RankLimitError
from bruhat_orbits.core.types import CartanType, EdgePolicy
from bruhat_orbits.weyl.signed_perm import SignedPermutation


def c_perm(images: tuple[int, ...]) -> SignedPermutation:
    return SignedPermutation(images, CartanType.C)


def test_node_counts() -> None:
    assert len(involution_nodes(3, basis_only=True)) == 7
    assert len(involution_nodes(3, basis_only=False)) == 20


def test_basis_chains_in_rank_two() -> None:
    report = verify_conjecture27(2)

    assert report.passed
    assert report.nodes == 3
    assert report.edges == 2
    assert report.pairs_checked == 3


def test_shortest_chain_passes_through_the_swap() -> None:
    admissible = admissible_graph(2, basis_only=True)

    chain = find_chain(admissible, c_perm((-2, -1)), c_perm((1, 2)))

    assert chain.reachable
    assert chain.chain == (c_perm((-2, -1)), c_perm((2, 1)), c_perm((1, 2)))
    assert chain.describe()["chain"] == ["-2,-1", "2,1", "1,2"]
    assert admissible.graph.edges[c_perm((2, 1)), c_perm((1, 2))]["type"] == "1.19"


def test_no_chain_upwards() -> None:
    admissible = admissible_graph(2, basis_only=True)
    chain = find_chain(admissible, c_perm((1, 2)), c_perm((2, 1)))
    assert not chain.reachable
    assert "chain" not in chain.describe()


def test_all_involution_chains_in_rank_two() -> None:
    report = verify_corollary26(2, include_chains=True)

    assert report.passed
    assert report.nodes == 6
    assert report.pairs_checked == 13
    assert len(report.chains) == 13


def test_loose_policy_keeps_at_least_the_strict_edges() -> None:
    strict = admissible_graph(3, basis_only=False, policy=EdgePolicy.STRICT)
    loose = admissible_graph(3, basis_only=False, policy=EdgePolicy.LOOSE)

    assert set(strict.graph.edges) <= set(loose.graph.edges)
    assert loose.graph.number_of_edges() - strict.graph.number_of_edges() == len(
        {(tau, sigma) for tau, sigma, _ in strict.unordered_edges}
    )


def test_below_excludes_the_node_itself() -> None:
    admissible = admissible_graph(2, basis_only=True)
    top = admissible.index(c_perm((-2, -1)))
    below = {admissible.nodes[int(idx)].perm for idx in admissible.below(top)}
    assert below == {c_perm((1, 2)), c_perm((2, 1))}


def test_no_collisions_in_rank_two() -> None:
    assert table_collisions(2) == []


def test_rank_limits() -> None:
    with pytest.raises(RankLimitError):
        verify_conjecture27(8)
    with pytest.raises(RankLimitError):
        verify_corollary26(6)
    with pytest.raises(RankLimitError):
        table_collisions(5)


@pytest.mark.slow
@pytest.mark.parametrize("n", [3, 4, 5])
def test_basis_chains_exist(n: int) -> None:
    assert verify_conjecture27(n).passed


@pytest.mark.slow
def test_all_involution_chains_in_rank_three() -> None:
    assert verify_corollary26(3).passed
