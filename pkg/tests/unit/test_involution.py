import pytest

from bruhat_orbits.core.exceptions import (
    CartanTypeError,
    NonOrthogonalRootsError,
    NotAnInvolutionError,
    SupportUndefinedError,
)
from bruhat_orbits.core.types import CartanType
from bruhat_orbits.weyl.involution import Involution, d_statistic, from_support, is_basis
from bruhat_orbits.weyl.root_system import Root, format_roots
from bruhat_orbits.weyl.signed_perm import SignedPermutation, enumerate_involutions


def test_support_reads_the_cycle_structure() -> None:
    w = Involution(SignedPermutation.parse("3,-6,1,-4,-5,-2", CartanType.C))

    assert format_roots(w.support) == ["e1-e3", "e2+e6", "2e4", "2e5"]
    assert w.d == 2
    assert not w.basis


def test_basis_involution_support_in_type_b() -> None:
    w = Involution(SignedPermutation((-3, 2, -1), CartanType.B))
    assert w.support == frozenset({Root.sum(1, 3)})
    assert w.basis


def test_sign_flips_have_no_support_outside_type_c() -> None:
    with pytest.raises(SupportUndefinedError):
        _ = Involution(SignedPermutation((-1, 2), CartanType.B)).support
    with pytest.raises(SupportUndefinedError):
        _ = Involution(SignedPermutation((-5, -2, 3, -4, -1), CartanType.D)).support


def test_from_support_multiplies_reflections() -> None:
    roots = [Root.sum(1, 5), Root.sum(2, 4), Root.diff(2, 4)]
    assert from_support(roots, 5, CartanType.D).images == (-5, -2, 3, -4, -1)


def test_from_support_rejects_non_orthogonal_roots() -> None:
    with pytest.raises(NonOrthogonalRootsError):
        from_support([Root.diff(1, 2), Root.diff(2, 3)], 3, CartanType.B)


@pytest.mark.parametrize("n", [2, 3, 4, 5])
@pytest.mark.parametrize("cartan", [CartanType.B, CartanType.C, CartanType.D])
def test_support_inverts_from_support(cartan: CartanType, n: int) -> None:
    basis_only = cartan is not CartanType.C
    for w in enumerate_involutions(n, cartan, basis_only=basis_only):
        assert from_support(Involution(w).support, n, cartan) == w, w.format()


def test_non_involutions_are_rejected() -> None:
    with pytest.raises(NotAnInvolutionError):
        Involution(SignedPermutation((2, 3, 1), CartanType.B))


def test_is_basis() -> None:
    assert is_basis(SignedPermutation((2, 1, -4, -3)))
    assert not is_basis(SignedPermutation((1, -2)))


def test_d_statistic_counts_sign_flips_in_type_c() -> None:
    assert d_statistic(SignedPermutation((-1, 3, 2, -4), CartanType.C)) == 2
    assert d_statistic(SignedPermutation.identity(3, CartanType.C)) == 0


@pytest.mark.parametrize("cartan", [CartanType.B, CartanType.D])
def test_d_statistic_is_defined_for_type_c_only(cartan: CartanType) -> None:
    with pytest.raises(CartanTypeError):
        d_statistic(SignedPermutation((2, 1, 3), cartan))
