"""
Bruhat Orbits: Bruhat order and Borel orbits of involutions.

Exact computations in the Weyl groups of the classical types and in the
matching matrix Lie algebras: rank-matrix Bruhat order with the type D parity
clause, supports of involutions, coadjoint orbit sampling over Q(zeta_8),
minor invariants, explicit degenerations and chain checks over involution
posets.
"""

__version__ = "0.1.0"
__author__ = "Bruhat Orbits Team"

from bruhat_orbits.core.config import Settings
from bruhat_orbits.core.types import CartanType, EdgePolicy

__all__ = [
    "CartanType",
    "EdgePolicy",
    "Settings",
    "__version__",
]
