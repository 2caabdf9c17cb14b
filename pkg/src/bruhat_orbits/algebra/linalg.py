"""Exact elimination over Q(zeta_8): rank, determinant, triangular inverse."""

from __future__ import annotations

from collections.abc import Sequence

from bruhat_orbits.algebra.exact_field import (
    ONE,
    ZERO,
    CycloElement,
    LaurentPoly,
    Scalar,
    to_scalar,
)
from bruhat_orbits.core.exceptions import FieldError, ShapeMismatchError, SingularMatrixError

Rows = Sequence[Sequence[Scalar]]


def _field_rows(rows: Rows) -> list[list[CycloElement]] | None:
    out: list[list[CycloElement]] = []
    for row in rows:
        converted: list[CycloElement] = []
        for entry in row:
            if isinstance(entry, LaurentPoly):
                if entry.is_zero:
                    converted.append(ZERO)
                elif entry.degree == 0 and entry.valuation == 0:
                    converted.append(entry.coefficient(0))
                else:
                    return None
            else:
                converted.append(CycloElement.coerce(entry))
        out.append(converted)
    return out


def rank(rows: Rows) -> int:
    """Rank over the field; Laurent entries must be constants."""
    matrix = _field_rows(rows)
    if matrix is None:
        raise ShapeMismatchError("rank needs constant entries")
    if not matrix:
        return 0
    width = len(matrix[0])
    pivot_row = 0
    for col in range(width):
        pivot = next(
            (r for r in range(pivot_row, len(matrix)) if matrix[r][col]),
            None,
        )
        if pivot is None:
            continue
        matrix[pivot_row], matrix[pivot] = matrix[pivot], matrix[pivot_row]
        inverse = matrix[pivot_row][col].inverse()
        lead = [entry * inverse for entry in matrix[pivot_row]]
        matrix[pivot_row] = lead
        for r in range(pivot_row + 1, len(matrix)):
            factor = matrix[r][col]
            if factor:
                matrix[r] = [a - factor * b for a, b in zip(matrix[r], lead)]
        pivot_row += 1
        if pivot_row == len(matrix):
            break
    return pivot_row


def determinant(rows: Rows) -> Scalar:
    """
    Determinant of a square matrix.

    Field entries use elimination. Laurent entries use cofactor expansion
    along the sparsest row, which is fine for the small minors involved.
    """
    size = len(rows)
    if any(len(row) != size for row in rows):
        raise ShapeMismatchError(f"determinant of a non-square {size}-row matrix")
    if size == 0:
        return ONE
    matrix = _field_rows(rows)
    if matrix is not None:
        return _field_determinant(matrix)
    return _cofactor_determinant([list(row) for row in rows])


def _field_determinant(matrix: list[list[CycloElement]]) -> CycloElement:
    size = len(matrix)
    result = ONE
    for col in range(size):
        pivot = next((r for r in range(col, size) if matrix[r][col]), None)
        if pivot is None:
            return ZERO
        if pivot != col:
            matrix[col], matrix[pivot] = matrix[pivot], matrix[col]
            result = -result
        lead = matrix[col][col]
        result = result * lead
        inverse = lead.inverse()
        for r in range(col + 1, size):
            factor = matrix[r][col]
            if factor:
                scale = factor * inverse
                matrix[r] = [a - scale * b for a, b in zip(matrix[r], matrix[col])]
    return result


def _cofactor_determinant(matrix: list[list[Scalar]]) -> Scalar:
    size = len(matrix)
    if size == 1:
        return matrix[0][0]
    row_index = min(range(size), key=lambda r: sum(1 for entry in matrix[r] if entry))
    total: Scalar = ZERO
    for col, entry in enumerate(matrix[row_index]):
        if not entry:
            continue
        minor = [
            [value for c, value in enumerate(row) if c != col]
            for r, row in enumerate(matrix)
            if r != row_index
        ]
        term = entry * _cofactor_determinant(minor)
        total = total + term if (row_index + col) % 2 == 0 else total - term
    return total


def upper_triangular_inverse(rows: Rows) -> list[list[Scalar]]:
    """
    Inverse of an upper-triangular matrix by back substitution.

    Diagonal entries must be units: nonzero field elements or Laurent
    monomials.
    """
    size = len(rows)
    for r in range(size):
        for c in range(r):
            if rows[r][c]:
                raise SingularMatrixError(f"entry ({r}, {c}) below the diagonal is nonzero")
    diagonal_inverse: list[Scalar] = []
    for r in range(size):
        entry = rows[r][r]
        if not entry:
            raise SingularMatrixError(f"diagonal entry {r} is zero")
        try:
            diagonal_inverse.append(to_scalar(entry).inverse())
        except FieldError as exc:
            raise SingularMatrixError(f"diagonal entry {r} is not a unit") from exc
    inverse: list[list[Scalar]] = [[ZERO] * size for _ in range(size)]
    for col in range(size):
        inverse[col][col] = diagonal_inverse[col]
        for row in range(col - 1, -1, -1):
            acc: Scalar = ZERO
            for k in range(row + 1, col + 1):
                if rows[row][k] and inverse[k][col]:
                    acc = acc + rows[row][k] * inverse[k][col]
            if acc:
                inverse[row][col] = -(acc * diagonal_inverse[row])
    return inverse
