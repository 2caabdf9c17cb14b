"""Pair classification tables and chain reachability."""

from bruhat_orbits.chains.classification import PairType, classify_pair, is_basis_admissible
from bruhat_orbits.chains.reachability import (
    ChainReport,
    verify_conjecture27,
    verify_corollary26,
)

__all__ = [
    "ChainReport",
    "PairType",
    "classify_pair",
    "is_basis_admissible",
    "verify_conjecture27",
    "verify_corollary26",
]
