"""
Relative positions of two involution supports, encoded as pattern data.

Each row lists the roots only sigma has and the roots only tau has, written
over index variables with a chain constraint such as i < k < j < l. Tokens:
``i-j`` is eps_i - eps_j, ``i+j`` is eps_i + eps_j and ``2i`` is 2 eps_i.

Table 1 and Table 2 keep the number of long roots; Table 3 adds long roots
on the tau side and Table 4 on the sigma side. Rows marked doubtful have a
cell whose typeset source is ambiguous; they are matched but excluded from
collision checks.
"""

from __future__ import annotations

from collections.abc import Mapping
from dataclasses import dataclass

from bruhat_orbits.weyl.root_system import Root


@dataclass(frozen=True)
class RootToken:
    """One root of a pattern, over index variables."""

    kind: str  # "-", "+" or "2"
    first: str
    second: str = ""

    @classmethod
    def parse(cls, text: str) -> RootToken:
        text = text.strip()
        if text.startswith("2"):
            return cls("2", text[1:])
        for sign in "-+":
            if sign in text:
                first, second = text.split(sign)
                return cls(sign, first, second)
        raise ValueError(f"bad root token '{text}'")

    def instantiate(self, values: Mapping[str, int]) -> Root:
        if self.kind == "2":
            return Root.long(values[self.first])
        a, b = values[self.first], values[self.second]
        if self.kind == "-":
            return Root.diff(a, b)
        return Root.sum(min(a, b), max(a, b))


@dataclass(frozen=True)
class TableRow:
    """Case ``case`` of table ``table``."""

    table: int
    case: int
    sigma_only: tuple[RootToken, ...]
    tau_only: tuple[RootToken, ...]
    chain: str  # index variables in increasing order
    doubtful: bool = False

    @property
    def label(self) -> str:
        return f"{self.table}.{self.case}"

    def instantiate(self, values: Mapping[str, int]) -> tuple[frozenset[Root], frozenset[Root]]:
        return (
            frozenset(token.instantiate(values) for token in self.sigma_only),
            frozenset(token.instantiate(values) for token in self.tau_only),
        )


def _row(
    table: int, case: int, sigma_only: str, tau_only: str, chain: str, doubtful: bool = False
) -> TableRow:
    def tokens(text: str) -> tuple[RootToken, ...]:
        return tuple(RootToken.parse(part) for part in text.split(",") if part.strip())

    return TableRow(table, case, tokens(sigma_only), tokens(tau_only), chain, doubtful)


# Case d(sigma) = d(tau), no long roots
TABLE_1 = (
    _row(1, 1, "i+j", "i+k", "ikj", doubtful=True),
    _row(1, 2, "k-j, i+l", "i+j, k-l", "ikjl"),
    _row(1, 3, "i-j, k+l", "i-l, k+j", "ikjl"),
    _row(1, 4, "i-j", "i+j", "ij"),
    _row(1, 5, "i+j, k+l", "i+k, j+l", "ikjl"),
    _row(1, 6, "i+j, k-l", "i+k, j-l", "ikjl"),
    _row(1, 7, "i+l, k-j", "i+k", "ikjl"),
    _row(1, 8, "k-j", "i-j", "ikj"),
    _row(1, 9, "k+j", "i+j", "ikj"),
    _row(1, 10, "i-k", "i-j", "ikj"),
    _row(1, 11, "i-k, j-l", "i-j, k-l", "ikjl"),
    _row(1, 12, "i-k, j+l", "i-j, k+l", "ikjl"),
    _row(1, 13, "i+l, k+j", "i+j, k+l", "ikjl"),
    _row(1, 14, "i-j, k-l", "i-l, k-j", "ikjl"),
    _row(1, 15, "i-l, k+j", "i+j, k-l", "ikjl"),
    _row(1, 16, "i-j, k+l", "i+l, k-j", "ikjl"),
    _row(1, 17, "i-k, j-l", "i-l", "ikjl"),
    _row(1, 18, "i-k, j+l", "i+l", "ikjl"),
    _row(1, 19, "", "i-j", "ij"),
)

# Case d(sigma) = d(tau), long roots on both sides
TABLE_2 = (
    _row(2, 1, "2j", "2i", "ij"),
    _row(2, 2, "i+j, 2k", "2i, k+j", "ikj"),
    _row(2, 3, "i-j, 2k", "2i, k-j", "ikj"),
    _row(2, 4, "i-k, 2j", "2i", "ikj"),
    _row(2, 5, "i-k, 2j", "i-j, 2k", "ikj"),
    _row(2, 6, "i+j, 2k", "i+k, 2j", "ikj"),
)

# Case d(sigma) < d(tau)
TABLE_3 = (
    _row(3, 1, "", "2i", "i"),
    _row(3, 2, "i+j", "2i, 2j", "ij"),
    _row(3, 3, "i-j", "2i", "ij"),
    _row(3, 4, "i+j, k-l", "2i, k+j", "ikjl", doubtful=True),
    _row(3, 5, "i+l, k-j", "2i, k+l", "ikjl"),
    _row(3, 6, "i-l, k-j", "2i, k-l", "ikjl"),
)

# Case d(sigma) > d(tau)
TABLE_4 = (
    _row(4, 1, "i-j, 2k", "i+k", "ikj"),
    _row(4, 2, "2j", "i+j", "ij"),
    _row(4, 3, "2k, 2j", "i+k", "ikj"),
    _row(4, 4, "i-k, 2j", "i+j", "ikj"),
    _row(4, 5, "i-k, 2j, 2l", "i-l, k+j", "ikjl"),
    _row(4, 6, "i+l, 2k, 2j", "i+k, j+l", "ikjl"),
    _row(4, 7, "i-l, 2k, 2j", "i+k, j-l", "ikjl"),
    _row(4, 8, "i-j, 2k, 2l", "i+k", "ikjl"),
    _row(4, 9, "i-k, 2j, 2l", "i+j", "ikjl"),
)

ALL_ROWS: tuple[TableRow, ...] = TABLE_1 + TABLE_2 + TABLE_3 + TABLE_4
ROWS_BY_SIZE: dict[int, tuple[TableRow, ...]] = {
    size: tuple(row for row in ALL_ROWS if len(row.chain) == size) for size in (1, 2, 3, 4)
}


def rows_for_table(table: int) -> tuple[TableRow, ...]:
    return tuple(row for row in ALL_ROWS if row.table == table)
