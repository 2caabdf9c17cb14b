import pytest

from bruhat_orbits.core.exceptions import (
    EnumerationLimitError,
    InvalidPermutationError,
    RankMismatchError,
)
from bruhat_orbits.core.types import CartanType
from bruhat_orbits.weyl.root_system import Root
from bruhat_orbits.weyl.signed_perm import (
    SignedPermutation,
    bfs_length_oracle,
    enumerate_group,
    enumerate_involutions,
    group_order,
    reflection,
)


def test_parse_and_format() -> None:
    w = SignedPermutation.parse("-5, 2,4,3,-1")
    assert w.images == (-5, 2, 4, 3, -1)
    assert w.format() == "-5,2,4,3,-1"
    assert w(-1) == 5
    assert w(0) == 0


@pytest.mark.parametrize(
    "images, cartan",
    [
        ((1, 1), CartanType.B),
        ((1, 3), CartanType.B),
        ((-1, 2), CartanType.A),
        ((-1, 2, 3), CartanType.D),
        ((), CartanType.B),
    ],
)
def test_invalid_images_are_rejected(images: tuple[int, ...], cartan: CartanType) -> None:
    with pytest.raises(InvalidPermutationError):
        SignedPermutation(images, cartan)


def test_parse_rejects_garbage() -> None:
    with pytest.raises(InvalidPermutationError):
        SignedPermutation.parse("1,x")


def test_product_of_reflections_in_type_d() -> None:
    s1 = reflection(Root.sum(1, 5), 5, CartanType.D)
    s2 = reflection(Root.sum(2, 4), 5, CartanType.D)
    s3 = reflection(Root.diff(2, 4), 5, CartanType.D)

    assert (s1 * s2 * s3).images == (-5, -2, 3, -4, -1)


def test_inverse_composes_to_identity() -> None:
    w = SignedPermutation((3, -1, -4, 2))
    assert (w * w.inverse()).is_identity()
    assert (w.inverse() * w).is_identity()


def test_compose_rejects_mismatched_groups() -> None:
    with pytest.raises(RankMismatchError):
        SignedPermutation((1, 2)) * SignedPermutation((1, 2, 3))
    with pytest.raises(RankMismatchError):
        SignedPermutation((1, 2), CartanType.B) * SignedPermutation((1, 2), CartanType.D)


def test_b_and_c_share_the_group() -> None:
    product = SignedPermutation((-1, 2), CartanType.B) * SignedPermutation((2, 1), CartanType.C)
    assert product.images == (2, -1)


@pytest.mark.parametrize(
    "n, cartan, expected",
    [(4, CartanType.A, 6), (3, CartanType.B, 9), (4, CartanType.D, 12), (3, CartanType.D, 6)],
)
def test_longest_element_length(n: int, cartan: CartanType, expected: int) -> None:
    assert SignedPermutation.longest_element(n, cartan).length() == expected


@pytest.mark.parametrize(
    "n, cartan", [(4, CartanType.A), (3, CartanType.B), (3, CartanType.D), (4, CartanType.D)]
)
def test_inversion_length_matches_cayley_distance(n: int, cartan: CartanType) -> None:
    for w in enumerate_group(n, cartan):
        assert w.length() == bfs_length_oracle(w)


@pytest.mark.parametrize(
    "n, cartan", [(4, CartanType.A), (3, CartanType.B), (4, CartanType.D)]
)
def test_enumeration_yields_each_element_once(n: int, cartan: CartanType) -> None:
    elements = list(enumerate_group(n, cartan))
    assert len(elements) == len(set(elements)) == group_order(n, cartan)


def test_involution_counts_in_type_c() -> None:
    counts = [len(list(enumerate_involutions(n, CartanType.C))) for n in range(1, 6)]
    assert counts == [2, 6, 20, 76, 312]


def test_basis_involution_counts() -> None:
    counts = [
        len(list(enumerate_involutions(n, CartanType.C, basis_only=True))) for n in range(1, 8)
    ]
    assert counts == [1, 3, 7, 25, 81, 331, 1303]


def test_enumerated_involutions_are_involutions() -> None:
    found = list(enumerate_involutions(4, CartanType.D))
    assert len(found) == len(set(found))
    assert all(w.is_involution() and w.sign_changes % 2 == 0 for w in found)
    brute = [w for w in enumerate_group(4, CartanType.D) if w.is_involution()]
    assert set(found) == set(brute)


def test_enumeration_limit() -> None:
    with pytest.raises(EnumerationLimitError):
        next(enumerate_group(9, CartanType.A))
