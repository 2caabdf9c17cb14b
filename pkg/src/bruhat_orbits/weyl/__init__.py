"""Weyl groups, root systems, Bruhat order and involutions."""

from bruhat_orbits.weyl.bruhat_order import compare_bruhat, leq_bruhat, leq_star, rank_matrix
from bruhat_orbits.weyl.involution import Involution, from_support, support
from bruhat_orbits.weyl.root_system import Root, RootSystem
from bruhat_orbits.weyl.signed_perm import SignedPermutation, reflection

__all__ = [
    "Involution",
    "Root",
    "RootSystem",
    "SignedPermutation",
    "compare_bruhat",
    "from_support",
    "leq_bruhat",
    "leq_star",
    "rank_matrix",
    "reflection",
    "support",
]
