"""
Index tuples, tuple families and minors of linear forms.

Tuples are ordered sequences of distinct labels in [-n, n] \\ {0}; row order
matters because a minor changes sign with it.
"""

from __future__ import annotations

from collections.abc import Sequence
from enum import Enum

from bruhat_orbits.algebra import linalg
from bruhat_orbits.algebra.exact_field import ZERO, Scalar
from bruhat_orbits.core.exceptions import IndexTupleError
from bruhat_orbits.lie.lie_matrix import LieMatrix

IndexTuple = tuple[int, ...]


class PairingRule(str, Enum):
    """
    Entries appended by the plus/minus operators.

    MIRROR appends (p_i, -p_i) for the plus operator and (p_j, -p_j) for the
    minus operator; this is the rule behind the tuple families and the
    vanishing polynomials. CROSSED appends (p_i, -p_j) and (p_j, -p_i).
    """

    MIRROR = "mirror"
    CROSSED = "crossed"


def _require_distinct(indices: Sequence[int]) -> IndexTuple:
    result = tuple(indices)
    if len(set(result)) != len(result):
        raise IndexTupleError(result, "entries must be distinct")
    if 0 in result:
        raise IndexTupleError(result, "0 is not a valid index")
    return result


def tuple_replace(indices: Sequence[int], old: int, new: int) -> IndexTuple:
    """Put ``new`` in the slot of ``old``."""
    current = tuple(indices)
    if old not in current:
        raise IndexTupleError(current, f"{old} is not an entry")
    return tuple(new if value == old else value for value in current)


def tuple_remove(indices: Sequence[int], *removed: int) -> IndexTuple:
    current = tuple(indices)
    missing = [value for value in removed if value not in current]
    if missing:
        raise IndexTupleError(current, f"{missing} are not entries")
    return tuple(value for value in current if value not in removed)


def tuple_plus_minus(
    indices: Sequence[int],
    first: int,
    second: int,
    sign: int,
    rule: PairingRule = PairingRule.CROSSED,
) -> IndexTuple:
    """
    Drop ``first`` and ``second`` from their slots and append a pair at the end.

    ``first`` must come before ``second``. ``sign`` is +1 or -1.
    """
    current = tuple(indices)
    if first not in current or second not in current:
        raise IndexTupleError(current, f"({first}, {second}) are not both entries")
    if current.index(first) >= current.index(second):
        raise IndexTupleError(current, f"{first} must precede {second}")
    if sign not in (1, -1):
        raise IndexTupleError(current, f"sign must be +1 or -1, got {sign}")
    rest = tuple_remove(current, first, second)
    if rule is PairingRule.MIRROR:
        pivot = first if sign > 0 else second
        return rest + (pivot, -pivot)
    if sign > 0:
        return rest + (first, -second)
    return rest + (second, -first)


def s_family(
    indices: Sequence[int],
    paired: Sequence[int],
    rule: PairingRule = PairingRule.MIRROR,
) -> list[IndexTuple]:
    """
    Family generated from ``indices`` by the consecutive pairs of ``paired``.

    The empty pairing gives the tuple itself; every further pair doubles the
    family by applying the plus and the minus operator to each member.
    """
    base = _require_distinct(indices)
    pairs = _require_distinct(paired)
    if len(pairs) % 2:
        raise IndexTupleError(pairs, "paired entries must have even length")
    if any(value not in base for value in pairs):
        raise IndexTupleError(pairs, f"paired entries must belong to {base}")
    family = [base]
    for k in range(0, len(pairs), 2):
        first, second = pairs[k], pairs[k + 1]
        family = [
            tuple_plus_minus(member, first, second, sign, rule)
            for member in family
            for sign in (1, -1)
        ]
    return family


def minor(x: LieMatrix, rows: Sequence[int], cols: Sequence[int]) -> Scalar:
    """Determinant of the rows ``rows`` and columns ``cols`` of ``x``, in tuple order."""
    if len(rows) != len(cols):
        raise IndexTupleError(tuple(rows), f"expected {len(cols)} rows to match the columns")
    return linalg.determinant(x.submatrix(rows, cols))


def d_poly(
    x: LieMatrix,
    indices: Sequence[int],
    paired: Sequence[int],
    cols: Sequence[int],
    rule: PairingRule = PairingRule.MIRROR,
) -> Scalar:
    """Sum of the minors over the tuple family of (indices, paired)."""
    total: Scalar = ZERO
    for member in s_family(indices, paired, rule):
        total = total + minor(x, member, cols)
    return total
