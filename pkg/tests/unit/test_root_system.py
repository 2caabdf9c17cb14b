import pytest

from bruhat_orbits.core.exceptions import RootNotInSystemError, RootParseError, RootSystemError
from bruhat_orbits.core.types import CartanType
from bruhat_orbits.weyl.root_system import Root, RootKind, RootSystem, format_roots


def test_positive_root_counts() -> None:
    assert len(RootSystem(CartanType.A, 4).positive_roots) == 6
    assert len(RootSystem(CartanType.B, 3).positive_roots) == 9
    assert len(RootSystem(CartanType.C, 3).positive_roots) == 9
    assert len(RootSystem(CartanType.D, 4).positive_roots) == 12


def test_parse_each_root_shape() -> None:
    assert Root.parse("e1-e2") == Root.diff(1, 2)
    assert Root.parse("e1+e5") == Root.sum(1, 5)
    assert Root.parse("e3") == Root.short(3)
    assert Root.parse(" 2e4 ") == Root.long(4)
    assert Root.parse_many("") == []
    assert Root.parse_many("e1-e2, 2e3") == [Root.diff(1, 2), Root.long(3)]


@pytest.mark.parametrize("text", ["e2-e1", "e1+e1", "2e1+e2", "x1", "e0"])
def test_parse_rejects_malformed_roots(text: str) -> None:
    with pytest.raises(RootParseError):
        Root.parse(text)


def test_format_sorts_differences_then_sums_then_single_index() -> None:
    roots = [Root.long(2), Root.sum(1, 3), Root.diff(2, 4)]
    assert format_roots(roots) == ["e2-e4", "e1+e3", "2e2"]
    assert (-Root.diff(1, 2)).format() == "-(e1-e2)"


def test_require_checks_membership() -> None:
    system = RootSystem(CartanType.C, 3)
    assert system.require(Root.long(1)) == Root.long(1)
    with pytest.raises(RootNotInSystemError):
        system.require(Root.short(1))
    with pytest.raises(RootNotInSystemError):
        system.require(Root.diff(1, 4))
    with pytest.raises(RootNotInSystemError):
        system.require(-Root.long(1))


def test_type_d_needs_rank_two() -> None:
    with pytest.raises(RootSystemError):
        RootSystem(CartanType.D, 1)


def test_simple_roots_of_type_d_end_with_a_sum() -> None:
    simple = RootSystem(CartanType.D, 4).simple_roots
    assert simple[-1] == Root.sum(3, 4)
    assert [root.kind for root in simple[:-1]] == [RootKind.DIFF] * 3


def test_heights_of_highest_roots() -> None:
    assert RootSystem(CartanType.B, 2).height(Root.short(1)) == 2
    assert RootSystem(CartanType.C, 2).height(Root.long(1)) == 3
    assert RootSystem(CartanType.D, 4).height(Root.sum(1, 2)) == 5
    assert RootSystem(CartanType.A, 4).height(Root.diff(1, 4)) == 3


def test_strong_orthogonality() -> None:
    b2 = RootSystem(CartanType.B, 2)
    c2 = RootSystem(CartanType.C, 2)

    assert b2.orthogonal(Root.short(1), Root.short(2))
    assert not b2.strongly_orthogonal(Root.short(1), Root.short(2))
    assert c2.strongly_orthogonal(Root.long(1), Root.long(2))
    assert not c2.strongly_orthogonal(Root.diff(1, 2), Root.sum(1, 2))


def test_natural_order() -> None:
    c2 = RootSystem(CartanType.C, 2)
    assert c2.natural_order_leq(Root.diff(1, 2), Root.sum(1, 2))
    assert not c2.natural_order_leq(Root.sum(1, 2), Root.diff(1, 2))


def test_reflections_cover_positive_roots() -> None:
    system = RootSystem(CartanType.B, 3)
    reflections = system.reflections()
    assert len(set(reflections)) == 9
    assert all(r.is_involution() for r in reflections)
