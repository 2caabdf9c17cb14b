"""Matrix realizations of the classical Lie algebras and orbit sampling."""

from bruhat_orbits.lie.lie_matrix import LieMatrix
from bruhat_orbits.lie.matrix_rep import coadjoint, f_form, pairing, root_vector
from bruhat_orbits.lie.sampling import OrbitSample, orbit_samples

__all__ = [
    "LieMatrix",
    "OrbitSample",
    "coadjoint",
    "f_form",
    "orbit_samples",
    "pairing",
    "root_vector",
]
