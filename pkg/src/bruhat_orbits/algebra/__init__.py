"""Exact scalars and linear algebra over Q(zeta_8)."""

from bruhat_orbits.algebra.exact_field import (
    IMAG,
    ONE,
    SQRT2,
    ZERO,
    ZETA,
    CycloElement,
    LaurentPoly,
    Scalar,
)

__all__ = [
    "CycloElement",
    "LaurentPoly",
    "Scalar",
    "ZERO",
    "ONE",
    "ZETA",
    "IMAG",
    "SQRT2",
]
