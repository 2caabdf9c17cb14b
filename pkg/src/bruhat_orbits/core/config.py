"""
Configuration Management for Bruhat Orbits.

Uses Pydantic Settings for type-safe configuration with environment
variable support and YAML file loading. ``RunConfig`` is the resolved
per-command configuration that every verification report embeds.
"""

from __future__ import annotations

from fractions import Fraction
from pathlib import Path

import yaml
from pydantic import BaseModel, Field, field_validator, model_validator
from pydantic_settings import BaseSettings, SettingsConfigDict

from bruhat_orbits.core.types import CartanType, EdgePolicy

SEED_MAX = 2**64 - 1


class SamplingConfig(BaseModel):
    """Seeded orbit sampling."""

    seed: int = Field(default=0, ge=0, le=SEED_MAX)
    samples: int = Field(default=50, ge=0)
    coefficient_bound: int = Field(default=5, ge=0)
    # Scale factors must be squares in Q(zeta_8)
    xi_values: list[str] = Field(default=["1", "4", "9/4", "-1", "2"])

    @field_validator("xi_values")
    @classmethod
    def _xi_nonzero(cls, values: list[str]) -> list[str]:
        for value in values:
            if Fraction(value) == 0:
                raise ValueError("xi values must be nonzero")
        return values


class ChainConfig(BaseModel):
    """Admissible-pair chain verification."""

    policy: EdgePolicy = EdgePolicy.STRICT
    include_chains: bool = False  # attach a shortest chain to every checked pair


class LimitsConfig(BaseModel):
    """Rank ceilings for exhaustive commands."""

    max_enumerative_rank: int = Field(default=7, ge=1)
    max_pair_rank: int = Field(default=5, ge=1)
    max_oracle_rank: int = Field(default=5, ge=1)


class OutputConfig(BaseModel):
    """Report serialization."""

    indent: int = Field(default=2, ge=0)


class Settings(BaseSettings):
    """
    Main application settings.

    Can be configured via:
    - Environment variables (prefixed with BRUHAT_ORBITS_)
    - YAML config file
    - Direct instantiation
    """

    sampling: SamplingConfig = Field(default_factory=SamplingConfig)
    chains: ChainConfig = Field(default_factory=ChainConfig)
    limits: LimitsConfig = Field(default_factory=LimitsConfig)
    output: OutputConfig = Field(default_factory=OutputConfig)

    # Debug
    debug: bool = False
    log_level: str = "INFO"

    model_config = SettingsConfigDict(
        env_prefix="BRUHAT_ORBITS_",
        env_nested_delimiter="__",
    )

    @classmethod
    def from_yaml(cls, path: Path) -> Settings:
        """Load settings from a YAML file."""
        with open(path) as f:
            data = yaml.safe_load(f)
        return cls(**(data or {}))

    def to_yaml(self, path: Path) -> None:
        """Save settings to a YAML file."""
        with open(path, "w") as f:
            yaml.dump(self.model_dump(mode="json"), f, default_flow_style=False)


class RunConfig(BaseModel):
    """Resolved configuration of one command invocation."""

    type_tag: CartanType | None = None
    rank: int | None = Field(default=None, ge=1)
    seed: int = Field(default=0, ge=0, le=SEED_MAX)
    samples: int = Field(default=50, ge=0)
    coefficient_bound: int = Field(default=5, ge=0)
    policy: EdgePolicy = EdgePolicy.STRICT
    include_chains: bool = False
    indices: tuple[int, ...] | None = None
    limit: int | None = Field(default=None, ge=1)
    rank_limit: int | None = None
    output: Path | None = None

    @model_validator(mode="after")
    def _rank_within_limit(self) -> RunConfig:
        if self.rank is not None and self.rank_limit is not None and self.rank > self.rank_limit:
            raise ValueError(f"rank {self.rank} exceeds the supported limit {self.rank_limit}")
        return self

    @classmethod
    def from_settings(cls, settings: Settings, **overrides: object) -> RunConfig:
        """Start from the settings defaults and apply non-None command overrides."""
        values: dict[str, object] = {
            "seed": settings.sampling.seed,
            "samples": settings.sampling.samples,
            "coefficient_bound": settings.sampling.coefficient_bound,
            "policy": settings.chains.policy,
            "include_chains": settings.chains.include_chains,
        }
        values.update({key: value for key, value in overrides.items() if value is not None})
        return cls.model_validate(values)

    def report_view(self) -> dict[str, object]:
        """JSON-ready view embedded in reports."""
        data = self.model_dump(mode="json", exclude={"output", "rank_limit"})
        return {key: value for key, value in data.items() if value is not None}


def xi_scalars(settings: Settings) -> list[Fraction]:
    """The configured scale factors as exact rationals."""
    return [Fraction(value) for value in settings.sampling.xi_values]
