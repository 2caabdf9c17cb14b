"""
Classification of involution pairs by the relative position of their supports.

A pair (tau, sigma) is compared through the roots only sigma has and the
roots only tau has. Supports of distinct roots never share an index, so the
indices occurring in the two differences, sorted, determine the only possible
assignment of the pattern variables of a row.
"""

from __future__ import annotations

from dataclasses import dataclass

from bruhat_orbits.chains.tables import ALL_ROWS, TableRow
from bruhat_orbits.core.exceptions import PairTypeError
from bruhat_orbits.core.types import CartanType
from bruhat_orbits.weyl.involution import Involution
from bruhat_orbits.weyl.root_system import Root

_ROWS_BY_LABEL: dict[str, TableRow] = {row.label: row for row in ALL_ROWS}


@dataclass(frozen=True)
class PairType:
    """Table row matched by a pair, with the values of its index variables."""

    table: int
    case: int
    witness: tuple[tuple[str, int], ...]

    @property
    def label(self) -> str:
        return f"{self.table}.{self.case}"

    def describe(self) -> dict[str, object]:
        return {"type": self.label, "witness": dict(self.witness)}


def table_support(w: Involution) -> frozenset[Root]:
    """Support used by the tables; they are stated for type C."""
    if w.cartan not in (CartanType.B, CartanType.C):
        raise PairTypeError("table", f"{w.perm.describe()} is not in the hyperoctahedral group")
    return w.support


def support_differences(
    tau: Involution, sigma: Involution
) -> tuple[frozenset[Root], frozenset[Root]]:
    """(Supp(sigma) minus Supp(tau), Supp(tau) minus Supp(sigma))."""
    if tau.n != sigma.n:
        raise PairTypeError("table", f"ranks differ: {tau.n} and {sigma.n}")
    sigma_support, tau_support = table_support(sigma), table_support(tau)
    return sigma_support - tau_support, tau_support - sigma_support


def _match_row(
    row: TableRow, sigma_only: frozenset[Root], tau_only: frozenset[Root], indices: list[int]
) -> PairType | None:
    if len(row.sigma_only) != len(sigma_only) or len(row.tau_only) != len(tau_only):
        return None
    if len(row.chain) != len(indices):
        return None
    values = dict(zip(row.chain, indices))
    if row.instantiate(values) != (sigma_only, tau_only):
        return None
    return PairType(row.table, row.case, tuple((var, values[var]) for var in row.chain))


def _matches(tau: Involution, sigma: Involution) -> list[PairType]:
    sigma_only, tau_only = support_differences(tau, sigma)
    indices = sorted({index for root in sigma_only | tau_only for index in root.indices})
    if not indices:
        return []
    found = []
    for row in ALL_ROWS:
        match = _match_row(row, sigma_only, tau_only, indices)
        if match is not None:
            found.append(match)
    return found


def classify_pair(tau: Involution, sigma: Involution) -> PairType | None:
    """First table row matched by (tau, sigma), in table order."""
    matches = _matches(tau, sigma)
    return matches[0] if matches else None


def classify_all(tau: Involution, sigma: Involution) -> list[PairType]:
    """Every table row matched by (tau, sigma)."""
    return _matches(tau, sigma)


def collisions(tau: Involution, sigma: Involution) -> list[PairType]:
    """Matches when two or more confirmed rows claim the pair, else []."""
    confirmed = [
        match for match in _matches(tau, sigma) if not _ROWS_BY_LABEL[match.label].doubtful
    ]
    return confirmed if len(confirmed) > 1 else []


def is_admissible(tau: Involution, sigma: Involution) -> bool:
    return classify_pair(tau, sigma) is not None


def is_basis_admissible(tau: Involution, sigma: Involution) -> bool:
    """The pair matches a row of the first table; both involutions must be basis involutions."""
    for w in (tau, sigma):
        if not w.basis:
            raise PairTypeError("basis-admissible", f"{w} is not a basis involution")
    match = classify_pair(tau, sigma)
    return match is not None and match.table == 1
