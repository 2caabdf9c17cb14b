import pytest

from bruhat_orbits.core.exceptions import IndexTupleError
from bruhat_orbits.core.indexing import signed_layout, unsigned_layout
from bruhat_orbits.lie.lie_matrix import LieMatrix
from bruhat_orbits.orbits.minors import (
    PairingRule,
    d_poly,
    minor,
    s_family,
    tuple_plus_minus,
    tuple_remove,
    tuple_replace,
)


def test_replace_and_remove() -> None:
    assert tuple_replace((1, -2, 3), -2, 4) == (1, 4, 3)
    assert tuple_remove((1, -2, 3), 1, 3) == (-2,)
    with pytest.raises(IndexTupleError):
        tuple_replace((1, 2), 5, 3)
    with pytest.raises(IndexTupleError):
        tuple_remove((1, 2), 3)


def test_plus_minus_crossed_rule() -> None:
    assert tuple_plus_minus((1, 2, 3), 1, 3, 1) == (2, 1, -3)
    assert tuple_plus_minus((1, 2, 3), 1, 3, -1) == (2, 3, -1)


def test_plus_minus_mirror_rule() -> None:
    mirror = PairingRule.MIRROR
    assert tuple_plus_minus((1, 2, 3), 1, 3, 1, mirror) == (2, 1, -1)
    assert tuple_plus_minus((1, 2, 3), 1, 3, -1, mirror) == (2, 3, -3)


def test_plus_minus_validation() -> None:
    with pytest.raises(IndexTupleError):
        tuple_plus_minus((1, 2, 3), 3, 1, 1)
    with pytest.raises(IndexTupleError):
        tuple_plus_minus((1, 2, 3), 1, 4, 1)
    with pytest.raises(IndexTupleError):
        tuple_plus_minus((1, 2, 3), 1, 2, 0)


def test_family_doubles_with_each_pair() -> None:
    assert s_family((1, 2, 3), ()) == [(1, 2, 3)]
    assert s_family((1, 2, 3), (1, 3)) == [(2, 1, -1), (2, 3, -3)]
    assert len(s_family((1, 2, 3, 4), (1, 2, 3, 4))) == 4


@pytest.mark.parametrize(
    "indices, paired",
    [((1, 1, 2), ()), ((0, 1), ()), ((1, 2, 3), (1,)), ((1, 2, 3), (1, 4))],
)
def test_family_validation(indices: tuple[int, ...], paired: tuple[int, ...]) -> None:
    with pytest.raises(IndexTupleError):
        s_family(indices, paired)


def test_minor_respects_row_order() -> None:
    identity = LieMatrix.identity(unsigned_layout(3))
    assert minor(identity, (1, 2), (1, 2)) == 1
    assert minor(identity, (2, 1), (1, 2)) == -1
    with pytest.raises(IndexTupleError):
        minor(identity, (1,), (1, 2))


def test_d_poly_sums_over_the_family() -> None:
    identity = LieMatrix.identity(signed_layout(2))
    # (1, -1) contributes 1, (2, -2) contributes 0
    assert d_poly(identity, (1, 2), (1, 2), (1, -1)) == 1
