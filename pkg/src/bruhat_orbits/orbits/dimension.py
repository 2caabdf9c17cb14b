"""Dimension of the Borel orbit of f_w, computed as the rank of its tangent space."""

from __future__ import annotations

from collections.abc import Iterable

import structlog

from bruhat_orbits.lie.matrix_rep import f_form, tangent_rank
from bruhat_orbits.weyl.involution import Involution
from bruhat_orbits.weyl.root_system import Root, RootSystem

logger = structlog.get_logger()


def orbit_dimension(w: Involution) -> int:
    """Rank of {(x f_w - f_w x)_low : x in a basis of the Borel subalgebra}."""
    system = RootSystem(w.cartan, w.n)
    return support_orbit_dimension(w.support, system)


def support_orbit_dimension(roots: Iterable[Root], system: RootSystem) -> int:
    """Same as orbit_dimension for an explicit root set."""
    chosen = frozenset(roots)
    dimension = tangent_rank(f_form(chosen, system), system)
    logger.debug(
        "Orbit dimension computed",
        system=system.name,
        roots=sorted(root.format() for root in chosen),
        dimension=dimension,
    )
    return dimension
