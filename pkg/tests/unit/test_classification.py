import pytest

from bruhat_orbits.chains.classification import (
    classify_all,
    classify_pair,
    collisions,
    is_admissible,
    is_basis_admissible,
    support_differences,
)
from bruhat_orbits.chains.tables import (
    ALL_ROWS,
    ROWS_BY_SIZE,
    TABLE_1,
    TABLE_2,
    TABLE_3,
    TABLE_4,
    RootToken,
    rows_for_table,
)
from bruhat_orbits.core.exceptions import PairTypeError
from bruhat_orbits.core.types import CartanType
from bruhat_orbits.weyl.involution import Involution
from bruhat_orbits.weyl.root_system import Root
from bruhat_orbits.weyl.signed_perm import SignedPermutation


def c_involution(images: tuple[int, ...]) -> Involution:
    return Involution(SignedPermutation(images, CartanType.C))


def test_table_sizes_and_labels() -> None:
    assert [len(t) for t in (TABLE_1, TABLE_2, TABLE_3, TABLE_4)] == [19, 6, 6, 9]
    labels = [row.label for row in ALL_ROWS]
    assert len(labels) == len(set(labels))
    assert [row.label for row in ALL_ROWS if row.doubtful] == ["1.1", "3.4"]
    assert rows_for_table(2) == TABLE_2
    assert sum(len(rows) for rows in ROWS_BY_SIZE.values()) == len(ALL_ROWS)


def test_every_row_mentions_each_chain_variable() -> None:
    for row in ALL_ROWS:
        used = {
            var
            for token in row.sigma_only + row.tau_only
            for var in (token.first, token.second)
            if var
        }
        assert used == set(row.chain), row.label


def test_root_tokens() -> None:
    assert RootToken.parse("k+j").instantiate({"k": 3, "j": 2}) == Root.sum(2, 3)
    assert RootToken.parse("i-l").instantiate({"i": 1, "l": 4}) == Root.diff(1, 4)
    assert RootToken.parse("2j").instantiate({"j": 5}) == Root.long(5)
    with pytest.raises(ValueError):
        RootToken.parse("ij")


def test_single_swap_above_the_identity() -> None:
    pair = classify_pair(c_involution((2, 1)), c_involution((1, 2)))

    assert pair is not None
    assert pair.label == "1.19"
    assert pair.describe() == {"type": "1.19", "witness": {"i": 1, "j": 2}}


def test_sum_above_difference() -> None:
    pair = classify_pair(c_involution((-2, -1)), c_involution((2, 1)))
    assert pair is not None and pair.label == "1.4"


def test_crossing_pattern() -> None:
    tau = Involution.from_roots([Root.diff(1, 3), Root.sum(2, 4)], 4, CartanType.C)
    sigma = Involution.from_roots([Root.diff(1, 2), Root.sum(3, 4)], 4, CartanType.C)

    pair = classify_pair(tau, sigma)

    assert pair is not None
    assert pair.label == "1.12"
    assert dict(pair.witness) == {"i": 1, "k": 2, "j": 3, "l": 4}
    assert is_basis_admissible(tau, sigma)


def test_long_root_rows() -> None:
    tau = c_involution((-1, 2))
    assert classify_pair(tau, c_involution((1, 2))).label == "3.1"  # type: ignore[union-attr]
    assert classify_pair(tau, c_involution((2, 1))).label == "3.3"  # type: ignore[union-attr]
    assert classify_pair(tau, c_involution((1, -2))).label == "2.1"  # type: ignore[union-attr]


def test_unrelated_pairs_have_no_type() -> None:
    w = c_involution((2, 1, 3))
    assert classify_pair(w, w) is None
    assert classify_all(w, w) == []
    assert not is_admissible(c_involution((1, 2, 3)), w)
    assert collisions(w, w) == []


def test_support_differences() -> None:
    sigma_only, tau_only = support_differences(c_involution((-2, -1)), c_involution((2, 1)))
    assert sigma_only == frozenset({Root.diff(1, 2)})
    assert tau_only == frozenset({Root.sum(1, 2)})


def test_basis_admissibility_needs_basis_involutions() -> None:
    with pytest.raises(PairTypeError):
        is_basis_admissible(c_involution((-1, 2)), c_involution((1, 2)))


def test_tables_are_not_defined_in_type_d() -> None:
    w = Involution(SignedPermutation((2, 1), CartanType.D))
    with pytest.raises(PairTypeError):
        classify_pair(w, w)


def test_type_b_basis_involutions_are_accepted() -> None:
    tau = Involution(SignedPermutation((2, 1), CartanType.B))
    sigma = Involution(SignedPermutation((1, 2), CartanType.B))
    assert is_basis_admissible(tau, sigma)
