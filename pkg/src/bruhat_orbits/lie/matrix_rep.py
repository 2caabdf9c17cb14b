"""
Matrix realizations of the classical Lie algebras and their Borel subgroups.

Rows and columns follow the order 1, ..., n, 0, -n, ..., -1 (the 0 only in type
B; type A uses 1, ..., n). In this order every positive root vector is
strictly upper triangular, so the Borel subgroup is upper triangular and
linear forms on the nilradical live in the strictly lower matrices through
the trace pairing <lambda, x> = tr(lambda x).
"""

from __future__ import annotations

from collections.abc import Iterable, Mapping
from fractions import Fraction

import structlog

from bruhat_orbits.algebra import linalg
from bruhat_orbits.algebra.exact_field import (
    ONE,
    SQRT2,
    CycloElement,
    Scalar,
    to_scalar,
)
from bruhat_orbits.core.exceptions import (
    MatrixError,
    NonOrthogonalRootsError,
    ShapeMismatchError,
    SingularMatrixError,
)
from bruhat_orbits.core.indexing import IndexLayout, signed_layout, unsigned_layout
from bruhat_orbits.core.types import CartanType
from bruhat_orbits.lie.lie_matrix import LieMatrix
from bruhat_orbits.weyl.root_system import Root, RootKind, RootSystem, sorted_roots

logger = structlog.get_logger()

# Linear forms are strictly lower LieMatrix values
LinearForm = LieMatrix


def lie_layout(system: RootSystem) -> IndexLayout:
    if system.cartan is CartanType.A:
        return unsigned_layout(system.n)
    return signed_layout(system.n, with_zero=system.cartan.has_zero_index)


def gram_matrix(system: RootSystem) -> LieMatrix:
    """Gram matrix J of the invariant form: symmetric for B and D, skew for C."""
    if system.cartan is CartanType.A:
        raise MatrixError(f"{system.name} has no invariant bilinear form here")
    layout = lie_layout(system)
    entries: dict[tuple[int, int], object] = {}
    for i in range(1, system.n + 1):
        entries[(i, -i)] = 1
        entries[(-i, i)] = -1 if system.cartan is CartanType.C else 1
    if system.cartan is CartanType.B:
        entries[(0, 0)] = 1
    return LieMatrix.from_entries(layout, entries)


def preserves_form(g: LieMatrix, system: RootSystem) -> bool:
    """True iff g^T J g = J; every matrix passes in type A."""
    if system.cartan is CartanType.A:
        return True
    gram = gram_matrix(system)
    return g.transpose().matmul(gram).matmul(g) == gram


# =============================================================================
# Root vectors and dual vectors
# =============================================================================


def root_vector(alpha: Root, system: RootSystem) -> LieMatrix:
    """Root vector e_alpha for a positive root alpha."""
    system.require(alpha)
    layout = lie_layout(system)
    i, j = alpha.i, alpha.j
    entries: dict[tuple[int, int], object]
    if alpha.kind is RootKind.DIFF:
        if system.cartan is CartanType.A:
            entries = {(i, j): 1}
        else:
            entries = {(i, j): 1, (-j, -i): -1}
    elif alpha.kind is RootKind.SUM:
        other = 1 if system.cartan is CartanType.C else -1
        entries = {(i, -j): 1, (j, -i): other}
    elif alpha.kind is RootKind.SHORT:
        entries = {(i, 0): SQRT2, (0, -i): -SQRT2}
    else:
        entries = {(i, -i): 1}
    return LieMatrix.from_entries(layout, entries)


def _dual_scale(alpha: Root, system: RootSystem) -> Fraction:
    if system.cartan is CartanType.A or alpha.kind is RootKind.LONG:
        return Fraction(1)
    if alpha.kind is RootKind.SHORT:
        return Fraction(1, 4)
    return Fraction(1, 2)


def dual_root_vector(alpha: Root, system: RootSystem) -> LinearForm:
    """The form e_alpha^*, dual to e_alpha under the trace pairing."""
    return root_vector(alpha, system).transpose().scale(_dual_scale(alpha, system))


def pairing(form: LinearForm, x: LieMatrix) -> Scalar:
    """<lambda, x> = tr(lambda x)."""
    return form.matmul(x).trace()


def f_form(
    roots: Iterable[Root],
    system: RootSystem,
    xi: Mapping[Root, object] | None = None,
) -> LinearForm:
    """
    The form sum over alpha in D of xi(alpha) e_alpha^*.

    Without ``xi`` every coefficient is 1. Roots must be pairwise orthogonal
    and every coefficient nonzero.
    """
    chosen = sorted_roots(set(roots))
    for idx, alpha in enumerate(chosen):
        system.require(alpha)
        for beta in chosen[idx + 1 :]:
            if not system.orthogonal(alpha, beta):
                raise NonOrthogonalRootsError(alpha.format(), beta.format())
    form = LieMatrix.zeros(lie_layout(system))
    for alpha in chosen:
        coeff = to_scalar(xi[alpha]) if xi is not None and alpha in xi else ONE
        if not coeff:
            raise MatrixError(f"coefficient of {alpha} must be nonzero")
        form = form + dual_root_vector(alpha, system).scale(coeff)
    return form


def form_values(form: LinearForm, system: RootSystem) -> dict[Root, Scalar]:
    """Values lambda(e_alpha) on every positive root, zeros omitted."""
    values: dict[Root, Scalar] = {}
    for alpha in system.positive_roots:
        value = pairing(form, root_vector(alpha, system))
        if value:
            values[alpha] = value
    return values


# =============================================================================
# Group generators
# =============================================================================


def x_gen(alpha: Root, s: object, system: RootSystem, negative: bool = False) -> LieMatrix:
    """
    Root subgroup element x_alpha(s) = exp(s e_alpha).

    The series stops at the first vanishing power; root vectors here are
    nilpotent of index at most 3. ``negative`` gives x_{-alpha}(s) = x_alpha(s)^T.
    """
    scalar = to_scalar(s)
    nilpotent = root_vector(alpha, system).scale(scalar)
    result = LieMatrix.identity(nilpotent.layout)
    term = result
    k = 0
    while True:
        k += 1
        term = term.matmul(nilpotent).scale(Fraction(1, k))
        if term.is_zero:
            break
        result = result + term
    return result.transpose() if negative else result


def w_gen(alpha: Root, s: object, system: RootSystem) -> LieMatrix:
    """w_alpha(s) = x_alpha(s) x_{-alpha}(-1/s) x_alpha(s)."""
    scalar = to_scalar(s)
    outer = x_gen(alpha, scalar, system)
    inner = x_gen(alpha, -scalar.inverse(), system, negative=True)
    return outer.matmul(inner).matmul(outer)


def h_gen(alpha: Root, s: object, system: RootSystem) -> LieMatrix:
    """Torus element h_alpha(s) = w_alpha(s) w_alpha(1)^{-1}; diagonal."""
    unit_inverse = (
        x_gen(alpha, -1, system)
        .matmul(x_gen(alpha, 1, system, negative=True))
        .matmul(x_gen(alpha, -1, system))
    )
    return w_gen(alpha, s, system).matmul(unit_inverse)


def normalizing_torus(xi: Mapping[Root, object], system: RootSystem) -> LieMatrix:
    """Product of h_alpha(sqrt(xi(alpha))), which carries f_{D, xi} to f_D."""
    h = LieMatrix.identity(lie_layout(system))
    for alpha in sorted_roots(xi):
        h = h.matmul(h_gen(alpha, CycloElement.coerce(xi[alpha]).sqrt(), system))
    return h


def coadjoint(g: LieMatrix, form: LinearForm) -> LinearForm:
    """g.lambda = (g lambda g^{-1})_low for g upper triangular."""
    if not g.is_upper_triangular():
        raise SingularMatrixError("group element is not upper triangular")
    return g.matmul(form).matmul(g.inverse_upper()).low()


# =============================================================================
# Rank invariants and tangent spaces
# =============================================================================


def pi_rank(form: LinearForm, row: int, col: int) -> int:
    """Rank of the block with rows ``row``..-1 and columns 1..``col``."""
    layout = form.layout
    if not layout.is_strictly_lower(row, col):
        raise ShapeMismatchError(f"({row}, {col}) is not a strictly lower cell")
    block = form.submatrix(layout.rows_from(row), layout.columns_to(col))
    return linalg.rank(block)


def cartan_basis(system: RootSystem) -> list[LieMatrix]:
    """Diagonal basis of the Cartan subalgebra."""
    layout = lie_layout(system)
    if system.cartan is CartanType.A:
        return [LieMatrix.unit(layout, k, k) for k in range(1, system.n + 1)]
    return [
        LieMatrix.from_entries(layout, {(k, k): 1, (-k, -k): -1}) for k in range(1, system.n + 1)
    ]


def borel_basis(system: RootSystem) -> list[LieMatrix]:
    """Cartan basis followed by the positive root vectors."""
    return cartan_basis(system) + [root_vector(alpha, system) for alpha in system.positive_roots]


def tangent_vectors(form: LinearForm, system: RootSystem) -> list[LieMatrix]:
    """(x lambda - lambda x)_low over a basis x of the Borel subalgebra."""
    return [x.bracket(form).low() for x in borel_basis(system)]


def tangent_rank(form: LinearForm, system: RootSystem) -> int:
    cells = form.layout.strictly_lower_cells()
    rows = [[vector.entry(r, c) for r, c in cells] for vector in tangent_vectors(form, system)]
    rank = linalg.rank(rows) if cells else 0
    logger.debug("Tangent rank computed", system=system.name, rank=rank)
    return rank
