from fractions import Fraction

from bruhat_orbits.core.types import CartanType
from bruhat_orbits.lie.matrix_rep import preserves_form
from bruhat_orbits.lie.sampling import (
    DEFAULT_XI_VALUES,
    LCG_INCREMENT,
    LCG_MASK,
    Lcg64,
    orbit_samples,
    random_unipotent,
    random_xi,
    sample_seed,
)
from bruhat_orbits.weyl.root_system import Root, RootSystem


def test_generator_starts_from_the_increment() -> None:
    rng = Lcg64(0)
    assert rng.next_u64() == LCG_INCREMENT


def test_generator_is_reproducible() -> None:
    first, second = Lcg64(42), Lcg64(42)
    assert [first.randint(-5, 5) for _ in range(20)] == [second.randint(-5, 5) for _ in range(20)]


def test_randint_stays_in_range() -> None:
    rng = Lcg64(7)
    draws = [rng.randint(1, 3) for _ in range(200)]
    assert set(draws) <= {1, 2, 3}
    assert len(set(draws)) == 3


def test_sample_seeds_wrap_at_64_bits() -> None:
    assert sample_seed(11, 0) == 11
    assert 0 <= sample_seed(LCG_MASK, 3) <= LCG_MASK
    assert sample_seed(5, 1) != sample_seed(5, 2)


def test_random_unipotent_lies_in_the_borel_subgroup() -> None:
    system = RootSystem(CartanType.B, 2)
    u = random_unipotent(system, seed=3, bound=4)
    assert u.is_unitriangular()
    assert preserves_form(u, system)


def test_xi_values_come_from_the_configured_set() -> None:
    roots = [Root.diff(1, 2), Root.sum(3, 4)]
    xi = random_xi(roots, seed=9)
    assert set(xi) == set(roots)
    assert all(value.rational_part() in DEFAULT_XI_VALUES for value in xi.values())

    only_one = random_xi(roots, seed=9, values=(Fraction(1),))
    assert all(value == 1 for value in only_one.values())


def test_orbit_samples_are_reproducible() -> None:
    system = RootSystem(CartanType.C, 3)
    roots = [Root.diff(1, 2), Root.long(3)]

    first = orbit_samples(system, roots, count=3, seed=5, bound=3)
    second = orbit_samples(system, roots, count=3, seed=5, bound=3)

    assert [s.form for s in first] == [s.form for s in second]
    assert [s.describe() for s in first] == [s.describe() for s in second]
    assert all(s.form.is_strictly_lower() for s in first)
    assert first[0].describe()["roots"] == ["e1-e2", "2e3"]
