"""
Seeded exact sampling of Borel orbit points.

A point of the orbit of f_w is reached as u.h.f_w for a unipotent u and a
torus element h; rescaling by h is the same as replacing f_w by f_{w, xi}
with xi drawn from perfect squares, so samples are coadjoint(u, f_{w, xi}).
All randomness comes from a 64-bit linear congruential generator so that a
seed reproduces the same matrices on every platform (see docs/sampling.md).
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field
from fractions import Fraction
from typing import TypeVar

import structlog

from bruhat_orbits.algebra.exact_field import CycloElement
from bruhat_orbits.lie.lie_matrix import LieMatrix
from bruhat_orbits.lie.matrix_rep import (
    LinearForm,
    coadjoint,
    f_form,
    lie_layout,
    x_gen,
)
from bruhat_orbits.weyl.root_system import Root, RootSystem, sorted_roots

logger = structlog.get_logger()

T = TypeVar("T")

LCG_MULTIPLIER = 6364136223846793005
LCG_INCREMENT = 1442695040888963407
LCG_MASK = (1 << 64) - 1

# Per-sample seed stride and salt for the xi stream
SEED_STRIDE = 0x9E3779B97F4A7C15
XI_SALT = 0x5851F42D4C957F2D

DEFAULT_XI_VALUES: tuple[Fraction, ...] = (
    Fraction(1),
    Fraction(4),
    Fraction(9, 4),
    Fraction(-1),
    Fraction(2),
)


class Lcg64:
    """state <- (A * state + C) mod 2**64; draws use the top 53 bits."""

    def __init__(self, seed: int) -> None:
        self.state = seed & LCG_MASK

    def next_u64(self) -> int:
        self.state = (LCG_MULTIPLIER * self.state + LCG_INCREMENT) & LCG_MASK
        return self.state

    def randint(self, low: int, high: int) -> int:
        """Integer in [low, high], both ends included."""
        if high < low:
            raise ValueError(f"empty range [{low}, {high}]")
        return low + (self.next_u64() >> 11) % (high - low + 1)

    def choice(self, values: Sequence[T]) -> T:
        return values[self.randint(0, len(values) - 1)]


def sample_seed(seed: int, index: int) -> int:
    """Seed of the ``index``-th sample in a batch."""
    return (seed + index * SEED_STRIDE) & LCG_MASK


def random_coefficient(rng: Lcg64, bound: int) -> Fraction:
    """Rational with |numerator| <= bound and 1 <= denominator <= max(bound, 1)."""
    return Fraction(rng.randint(-bound, bound), rng.randint(1, max(bound, 1)))


def random_unipotent(system: RootSystem, seed: int, bound: int) -> LieMatrix:
    """Product of x_alpha(s_alpha) over the positive roots in enumeration order."""
    rng = Lcg64(seed)
    u = LieMatrix.identity(lie_layout(system))
    for alpha in system.positive_roots:
        s = random_coefficient(rng, bound)
        if s:
            u = u.matmul(x_gen(alpha, s, system))
    return u


def random_xi(
    roots: Iterable[Root], seed: int, values: Sequence[Fraction] = DEFAULT_XI_VALUES
) -> dict[Root, CycloElement]:
    rng = Lcg64(seed ^ XI_SALT)
    return {alpha: CycloElement.coerce(rng.choice(values)) for alpha in sorted_roots(roots)}


@dataclass(frozen=True)
class OrbitSample:
    """The point coadjoint(u, f_{D, xi}) of the orbit attached to the root set D."""

    roots: frozenset[Root]
    xi: dict[Root, CycloElement] = field(compare=False)
    u_seed: int
    form: LinearForm = field(compare=False)

    def describe(self) -> dict[str, object]:
        return {
            "roots": [alpha.format() for alpha in sorted_roots(self.roots)],
            "xi": {alpha.format(): str(value) for alpha, value in self.xi.items()},
            "u_seed": self.u_seed,
        }


def orbit_sample(
    system: RootSystem,
    roots: Iterable[Root],
    u_seed: int,
    bound: int,
    xi_values: Sequence[Fraction] = DEFAULT_XI_VALUES,
) -> OrbitSample:
    chosen = frozenset(roots)
    xi = random_xi(chosen, u_seed, xi_values)
    u = random_unipotent(system, u_seed, bound)
    form = coadjoint(u, f_form(chosen, system, xi))
    return OrbitSample(chosen, xi, u_seed, form)


def orbit_samples(
    system: RootSystem,
    roots: Iterable[Root],
    count: int,
    seed: int,
    bound: int,
    xi_values: Sequence[Fraction] = DEFAULT_XI_VALUES,
) -> list[OrbitSample]:
    """``count`` reproducible samples of the orbit of f_D."""
    chosen = frozenset(roots)
    samples = [
        orbit_sample(system, chosen, sample_seed(seed, k), bound, xi_values) for k in range(count)
    ]
    logger.debug(
        "Orbit samples drawn",
        system=system.name,
        roots=[alpha.format() for alpha in sorted_roots(chosen)],
        count=count,
        seed=seed,
    )
    return samples
