"""Core components for Bruhat Orbits."""

from bruhat_orbits.core.config import RunConfig, Settings
from bruhat_orbits.core.exceptions import (
    BruhatOrbitsError,
    ConfigError,
    FieldError,
    GroupError,
    HypothesisError,
    MatrixError,
    RootSystemError,
)
from bruhat_orbits.core.types import CartanType, EdgePolicy

__all__ = [
    "CartanType",
    "EdgePolicy",
    "RunConfig",
    "Settings",
    "BruhatOrbitsError",
    "ConfigError",
    "FieldError",
    "GroupError",
    "HypothesisError",
    "MatrixError",
    "RootSystemError",
]
