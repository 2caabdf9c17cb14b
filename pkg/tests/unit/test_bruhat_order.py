import itertools

import numpy as np
import pytest

from bruhat_orbits.core.exceptions import NotAnInvolutionError, RankMismatchError
from bruhat_orbits.core.types import CartanType
from bruhat_orbits.weyl.bruhat_order import (
    bruhat_oracle,
    compare_bruhat,
    empty_rectangle,
    leq_bruhat,
    leq_star,
    parity_violations,
    rank_matrix,
    rook_matrix,
)
from bruhat_orbits.weyl.signed_perm import SignedPermutation, enumerate_group


def perm(images: tuple[int, ...], cartan: CartanType = CartanType.B) -> SignedPermutation:
    return SignedPermutation(images, cartan)


def test_rank_matrix_of_a_permutation() -> None:
    w = perm((4, 2, 5, 1, 3, 6), CartanType.A)

    assert rank_matrix(w).to_rows() == [
        [1, 2, 3, 4, 5, 6],
        [1, 2, 3, 3, 4, 5],
        [1, 1, 2, 2, 3, 4],
        [1, 1, 2, 2, 2, 3],
        [0, 0, 1, 1, 1, 2],
        [0, 0, 0, 0, 0, 1],
    ]


def test_rook_matrix_is_centrally_symmetric() -> None:
    rooks = rook_matrix(perm((-2, 4, 1, -3), CartanType.D))

    assert rooks.values.sum() == 8
    assert np.array_equal(rooks.values, rooks.values[::-1, ::-1])
    assert (-2, 1) in rooks.rooks()


def test_star_truncation_zeroes_the_upper_part() -> None:
    star = rank_matrix(perm((2, 1))).star()
    assert star.entry(1, 1) == 0
    assert star.entry(-1, 1) == rank_matrix(perm((2, 1))).entry(-1, 1)


def test_empty_rectangles() -> None:
    w = perm((-2, 4, 1, -3), CartanType.D)
    empty = [(a, b) for a in range(2, 5) for b in range(2, 5) if empty_rectangle(w, a, b)]
    assert empty == [(4, 3), (4, 4)]


def test_incomparable_short_root_products() -> None:
    sigma = perm((1, -2, -3, 4))
    tau = perm((-1, 2, 3, -4))

    assert not leq_bruhat(sigma, tau)
    assert not leq_bruhat(tau, sigma)
    assert compare_bruhat(sigma, tau).witness()["kind"] == "rank_entry"


def test_parity_clause_separates_rank_comparable_elements() -> None:
    v = perm((2, 1), CartanType.D)
    w = perm((-2, -1), CartanType.D)

    assert rank_matrix(v) <= rank_matrix(w)
    comparison = compare_bruhat(v, w)
    assert not comparison.leq
    assert comparison.parity_pair == (2, 2)
    assert parity_violations(v, w) == [(2, 2)]
    assert not bruhat_oracle(v, w)


def test_same_images_in_type_b_are_comparable() -> None:
    assert leq_bruhat(perm((2, 1)), perm((-2, -1)))


def test_identity_and_longest_element_bound_the_order() -> None:
    e = SignedPermutation.identity(3, CartanType.D)
    top = SignedPermutation.longest_element(3, CartanType.D)
    for w in enumerate_group(3, CartanType.D):
        assert leq_bruhat(e, w)
        assert leq_bruhat(w, top)


@pytest.mark.parametrize(
    "n, cartan",
    [(4, CartanType.A), (2, CartanType.B), (3, CartanType.B), (2, CartanType.D), (3, CartanType.D)],
)
def test_rank_criterion_matches_reflection_order(n: int, cartan: CartanType) -> None:
    elements = list(enumerate_group(n, cartan))
    for v, w in itertools.product(elements, repeat=2):
        assert leq_bruhat(v, w) == bruhat_oracle(v, w), (v.format(), w.format())


@pytest.mark.slow
def test_rank_criterion_matches_reflection_order_in_d4() -> None:
    elements = list(enumerate_group(4, CartanType.D))
    for v, w in itertools.product(elements, repeat=2):
        assert leq_bruhat(v, w) == bruhat_oracle(v, w), (v.format(), w.format())


def test_star_order_needs_involutions() -> None:
    with pytest.raises(NotAnInvolutionError):
        leq_star(perm((2, 3, 1)), perm((1, 2, 3)))


def test_comparison_needs_one_group() -> None:
    with pytest.raises(RankMismatchError):
        leq_bruhat(perm((1, 2)), perm((1, 2, 3)))
