"""
Involutions, basis involutions and their supports.

The support of an involution is the set of pairwise orthogonal positive roots
whose reflections multiply to it. It is read off the cycle structure: a swap
i <-> j gives eps_i - eps_j, a swap i <-> -j gives eps_i + eps_j, and a sign
flip i -> -i gives 2 eps_i in type C. Types B and D have no canonical choice
for sign flips, so only basis involutions (no sign flips) have a support there.
"""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass
from functools import cached_property

from bruhat_orbits.core.exceptions import (
    CartanTypeError,
    NonOrthogonalRootsError,
    NotAnInvolutionError,
    SupportUndefinedError,
)
from bruhat_orbits.core.types import CartanType
from bruhat_orbits.weyl.root_system import Root, RootSystem, sorted_roots
from bruhat_orbits.weyl.signed_perm import SignedPermutation, reflection


def is_basis(w: SignedPermutation) -> bool:
    """No index is sent to its own negative."""
    return all(w(i) != -i for i in range(1, w.n + 1))


def support(w: SignedPermutation) -> frozenset[Root]:
    if not w.is_involution():
        raise NotAnInvolutionError(w.images)
    if w.cartan in (CartanType.B, CartanType.D) and not is_basis(w):
        raise SupportUndefinedError(w.images)
    roots: set[Root] = set()
    for i in range(1, w.n + 1):
        image = w(i)
        if image == i:
            continue
        if image == -i:
            roots.add(Root.long(i))
        elif image > i:
            roots.add(Root.diff(i, image))
        elif -image > i:
            roots.add(Root.sum(i, -image))
    return frozenset(roots)


def from_support(roots: Iterable[Root], n: int, cartan: CartanType) -> SignedPermutation:
    """Product of the commuting reflections over a pairwise orthogonal set."""
    system = RootSystem(cartan, n)
    chosen = sorted_roots(set(roots))
    for idx, alpha in enumerate(chosen):
        system.require(alpha)
        for beta in chosen[idx + 1 :]:
            if not system.orthogonal(alpha, beta):
                raise NonOrthogonalRootsError(alpha.format(), beta.format())
    product = SignedPermutation.identity(n, cartan)
    for alpha in chosen:
        product = product.compose(reflection(alpha, n, cartan))
    return product


def d_statistic(w: SignedPermutation) -> int:
    """Number of long roots 2 eps_i in the support, i.e. of indices with w(i) = -i."""
    if w.cartan is not CartanType.C:
        raise CartanTypeError("d statistic", CartanType.C.value, w.cartan.value)
    if not w.is_involution():
        raise NotAnInvolutionError(w.images)
    return sum(1 for i in range(1, w.n + 1) if w(i) == -i)


@dataclass(frozen=True)
class Involution:
    """An involution together with its support."""

    perm: SignedPermutation

    def __post_init__(self) -> None:
        if not self.perm.is_involution():
            raise NotAnInvolutionError(self.perm.images)

    @classmethod
    def from_roots(cls, roots: Iterable[Root], n: int, cartan: CartanType) -> Involution:
        return cls(from_support(roots, n, cartan))

    @property
    def n(self) -> int:
        return self.perm.n

    @property
    def cartan(self) -> CartanType:
        return self.perm.cartan

    @property
    def basis(self) -> bool:
        return is_basis(self.perm)

    @cached_property
    def support(self) -> frozenset[Root]:
        return support(self.perm)

    @property
    def d(self) -> int:
        return d_statistic(self.perm)

    def __str__(self) -> str:
        return self.perm.format()
