"""Shared enumerations for root systems, groups and chain policies."""

from __future__ import annotations

from enum import Enum


class CartanType(str, Enum):
    """Classical Cartan type of the ambient root system."""

    A = "A"
    B = "B"
    C = "C"
    D = "D"

    @property
    def weyl_tag(self) -> str:
        """Weyl group tag: B and C share the hyperoctahedral group."""
        return "BC" if self in (CartanType.B, CartanType.C) else self.value

    @property
    def is_signed(self) -> bool:
        return self is not CartanType.A

    @property
    def has_zero_index(self) -> bool:
        """Odd orthogonal matrices carry an extra middle row and column 0."""
        return self is CartanType.B


class EdgePolicy(str, Enum):
    """Which chain steps count as edges in the admissible-pair graph."""

    STRICT = "strict"  # table match and strictly smaller in Bruhat order
    LOOSE = "loose"  # table match only
