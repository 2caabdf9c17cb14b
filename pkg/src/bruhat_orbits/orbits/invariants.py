"""
Rank invariants and minor-vanishing checks on orbit samples.

The orbit of f_w keeps two kinds of invariants. The ranks of the lower-left
blocks equal the entries of R_w^*. For type D basis involutions, suitable
sums of minors vanish on the whole orbit; the minor built from a parity
failure separates two orbits that the rank matrices cannot tell apart.
"""

from __future__ import annotations

import itertools
from collections.abc import Iterator, Sequence
from dataclasses import dataclass, field, replace

import structlog

from bruhat_orbits.algebra.exact_field import CycloElement
from bruhat_orbits.core.exceptions import HypothesisError, ParityConditionError
from bruhat_orbits.core.types import CartanType
from bruhat_orbits.lie.matrix_rep import LinearForm, f_form, pi_rank
from bruhat_orbits.lie.sampling import OrbitSample
from bruhat_orbits.orbits.minors import IndexTuple, PairingRule, d_poly, minor
from bruhat_orbits.weyl.bruhat_order import (
    compare_bruhat,
    empty_rectangle,
    parity_violations,
    rank_matrix,
    rank_matrix_star,
    rook_matrix,
)
from bruhat_orbits.weyl.involution import Involution
from bruhat_orbits.weyl.root_system import RootKind, RootSystem
from bruhat_orbits.weyl.signed_perm import SignedPermutation

logger = structlog.get_logger()


# =============================================================================
# Rank invariants
# =============================================================================


def rank_profile_mismatches(
    form: LinearForm, w: SignedPermutation
) -> list[tuple[int, int, int, int]]:
    """Cells (i, j) where pi_rank(form, i, j) differs from (R_w^*)_{i,j}, with both values."""
    star = rank_matrix_star(w)
    mismatches: list[tuple[int, int, int, int]] = []
    for row, col in star.layout.strictly_lower_cells():
        expected = star.entry(row, col)
        actual = pi_rank(form, row, col)
        if actual != expected:
            mismatches.append((row, col, actual, expected))
    return mismatches


def rook_count(
    w: SignedPermutation, row_low: int, row_high: int, col_low: int, col_high: int
) -> int:
    """Rooks of X_w in rows row_low..row_high (negative) and columns col_low..col_high."""
    n = w.n
    if not -n <= row_low <= row_high <= -1:
        raise HypothesisError(f"row band [{row_low}, {row_high}] must lie in [-{n}, -1]")
    if not 1 <= col_low <= col_high <= n:
        raise HypothesisError(f"column band [{col_low}, {col_high}] must lie in [1, {n}]")
    rooks = rook_matrix(w)
    return sum(
        rooks.entry(row, col)
        for row in range(row_low, row_high + 1)
        for col in range(col_low, col_high + 1)
    )


# =============================================================================
# Vanishing hypotheses
# =============================================================================


@dataclass(frozen=True)
class MinorConfiguration:
    """Data (a, b, P, Q, P') of a vanishing check, with P split into bands."""

    a: int
    b: int
    rows: IndexTuple
    cols: IndexTuple
    paired: IndexTuple = ()
    upper_band: IndexTuple = field(default=(), compare=False)
    lower_band: IndexTuple = field(default=(), compare=False)
    middle_band: IndexTuple = field(default=(), compare=False)

    def describe(self) -> dict[str, object]:
        return {
            "a": self.a,
            "b": self.b,
            "P": list(self.rows),
            "Q": list(self.cols),
            "P_prime": list(self.paired),
            "I": list(self.upper_band),
            "J": list(self.lower_band),
            "K": list(self.middle_band),
        }


def _support_counts(w: Involution, a: int) -> tuple[int, int]:
    """Support roots eps_i -+ eps_j with a <= j, as (differences, sums)."""
    diffs = sum(1 for root in w.support if root.kind is RootKind.DIFF and root.j >= a)
    sums = sum(1 for root in w.support if root.kind is RootKind.SUM and root.j >= a)
    return diffs, sums


def check_minor_hypotheses(
    w: Involution,
    a: int,
    b: int,
    rows: Sequence[int],
    cols: Sequence[int],
    paired: Sequence[int] = (),
) -> MinorConfiguration:
    """Validate a vanishing configuration for a type D basis involution."""
    n = w.n
    if w.cartan is not CartanType.D:
        raise HypothesisError(f"involution must be of type D, got {w.cartan.value}")
    if not w.basis:
        raise HypothesisError(f"{w} is not a basis involution")
    if not 2 <= b <= a <= n:
        raise HypothesisError(f"need 2 <= b <= a <= {n}, got a={a}, b={b}")
    if not empty_rectangle(w.perm, a, b):
        raise HypothesisError(f"[-{a}, {a}] x [-{b}, {b}] is not an empty rectangle")
    rows_t, cols_t, paired_t = tuple(rows), tuple(cols), tuple(paired)
    r = rank_matrix(w.perm).entry(a, b - 1)
    if len(rows_t) != r or len(cols_t) != r:
        raise HypothesisError(f"P and Q must have {r} entries, got {len(rows_t)} and {len(cols_t)}")
    if len(set(cols_t)) != r or any(not 1 <= q <= b - 1 for q in cols_t):
        raise HypothesisError(f"Q entries must be distinct and in [1, {b - 1}]")
    if len(set(rows_t)) != r:
        raise HypothesisError("P entries must be distinct")

    upper = tuple(p for p in rows_t if a <= p <= n)
    lower = tuple(p for p in rows_t if -n <= p <= -a)
    middle = tuple(p for p in rows_t if -(a - 1) <= p <= -1)
    if len(upper) + len(lower) + len(middle) != r:
        raise HypothesisError(f"P entries must lie in [{a}, {n}], [-{n}, -{a}] or [-{a - 1}, -1]")
    outer = upper + lower
    if len({abs(p) for p in outer}) != len(outer):
        raise HypothesisError("entries of I and J must have distinct absolute values")

    full = n - a + 1
    diffs, sums = _support_counts(w, a)
    diff_condition = diffs % 2 != len(upper) % 2
    if len(outer) == full and diff_condition != (sums % 2 != len(lower) % 2):
        logger.error("Parity conditions disagree", involution=str(w), a=a, b=b)
        raise ParityConditionError(str(w), a, b)
    if not (len(outer) < full or diff_condition):
        raise HypothesisError(
            f"|I u J| = {full} and the support parity matches |I| = {len(upper)}"
        )

    if len(paired_t) % 2 or len(set(paired_t)) != len(paired_t):
        raise HypothesisError("P' must have even length and distinct entries")
    if any(p not in outer for p in paired_t):
        raise HypothesisError("P' entries must belong to I u J")
    return MinorConfiguration(a, b, rows_t, cols_t, paired_t, upper, lower, middle)


def prop24_check(
    w: Involution,
    a: int,
    b: int,
    rows: Sequence[int],
    cols: Sequence[int],
    paired: Sequence[int],
    samples: Sequence[OrbitSample],
    rule: PairingRule = PairingRule.MIRROR,
) -> bool:
    """True iff the minor sum vanishes on every sample; raises HypothesisError on bad input."""
    config = check_minor_hypotheses(w, a, b, rows, cols, paired)
    return all(
        not d_poly(sample.form, config.rows, config.paired, config.cols, rule)
        for sample in samples
    )


def enumerate_minor_configurations(
    w: Involution, max_paired: int = 2, limit: int | None = None
) -> Iterator[MinorConfiguration]:
    """
    Every configuration passing check_minor_hypotheses, up to ``limit``.

    Q runs over increasing tuples, P over tuples ordered I, J, K (each band in
    display order) and P' over increasing subsets of I u J of even size at
    most ``max_paired``. A disagreement of the two parity conditions raises
    ParityConditionError instead of skipping the candidate.
    """
    n = w.n
    emitted = 0
    for a in range(2, n + 1):
        for b in range(2, a + 1):
            if not empty_rectangle(w.perm, a, b):
                continue
            r = rank_matrix(w.perm).entry(a, b - 1)
            candidates = [*range(a, n + 1), *range(-n, -a + 1), *range(-(a - 1), 0)]
            for cols in itertools.combinations(range(1, b), r):
                for rows in itertools.combinations(candidates, r):
                    try:
                        base = check_minor_hypotheses(w, a, b, rows, cols)
                    except ParityConditionError:
                        raise
                    except HypothesisError:
                        continue
                    outer = base.upper_band + base.lower_band
                    for size in range(0, min(max_paired, len(outer)) + 1, 2):
                        for paired in itertools.combinations(outer, size):
                            yield replace(base, paired=paired)
                            emitted += 1
                            if limit is not None and emitted >= limit:
                                return


# =============================================================================
# Separating minors
# =============================================================================


@dataclass(frozen=True)
class SeparatingMinor:
    """Rows P = I + J + K and columns Q of the minor built from a parity failure."""

    a: int
    b: int
    rows: IndexTuple
    cols: IndexTuple
    upper_band: IndexTuple
    lower_band: IndexTuple
    middle_band: IndexTuple


def build_pqk(sigma: Involution, a: int, b: int) -> SeparatingMinor:
    """
    Row and column tuples of the separating minor of ``sigma`` at (a, b).

    Q holds the columns q <= b - 1 whose rook lies in a row at or below a;
    I, J and K collect the rows sigma(q) in the bands [a, n], [-n, -a] and
    [-(a - 1), -1].
    """
    n = sigma.n
    w = sigma.perm
    if not 2 <= b <= a <= n:
        raise HypothesisError(f"need 2 <= b <= a <= {n}, got a={a}, b={b}")
    if not empty_rectangle(w, a, b):
        raise HypothesisError(f"[-{a}, {a}] x [-{b}, {b}] is not an empty rectangle")
    cols = tuple(q for q in range(1, b) if w(q) >= a or w(q) < 0)
    images = {w(q) for q in cols}
    upper = tuple(p for p in range(a, n + 1) if p in images)
    lower = tuple(p for p in range(-n, -a + 1) if p in images)
    middle = tuple(p for p in range(-(a - 1), 0) if p in images)
    expected_middle = rank_matrix(w).entry(-(a - 1), b - 1)
    if len(middle) != expected_middle:
        raise HypothesisError(f"|K| = {len(middle)} differs from rank entry {expected_middle}")
    if len(upper) + len(lower) != n - a + 1:
        raise HypothesisError(f"|I| + |J| = {len(upper) + len(lower)}, expected {n - a + 1}")
    return SeparatingMinor(a, b, upper + lower + middle, cols, upper, lower, middle)


def separating_certificate(sigma: Involution, pqk: SeparatingMinor) -> CycloElement:
    """The minor of f_sigma at (P, Q), rescaled by 2^|P| to remove the dual-vector factors."""
    system = RootSystem(sigma.cartan, sigma.n)
    value = minor(f_form(sigma.support, system), pqk.rows, pqk.cols)
    return CycloElement.coerce(value) * (2 ** len(pqk.rows))


@dataclass
class SeparationResult:
    sigma: str
    tau: str
    a: int
    b: int
    certificate: str
    vanishing: bool
    failures: list[str] = field(default_factory=list)


def separation_check(
    sigma: Involution, tau: Involution, samples: Sequence[OrbitSample]
) -> SeparationResult:
    """
    Check that the parity-failure minor is +-1 at f_sigma and vanishes on the orbit of tau.

    ``sigma`` must not lie below ``tau`` only because of the type D parity
    clause; ``samples`` are points of the orbit of f_tau.
    """
    comparison = compare_bruhat(sigma.perm, tau.perm)
    if comparison.parity_pair is None:
        raise HypothesisError(f"{sigma} and {tau} do not fail only the parity clause")
    pairs = parity_violations(sigma.perm, tau.perm)
    ordered = [(a, b) for a, b in pairs if a >= b]
    a, b = ordered[0] if ordered else (pairs[0][1], pairs[0][0])
    pqk = build_pqk(sigma, a, b)
    certificate = separating_certificate(sigma, pqk)
    result = SeparationResult(str(sigma), str(tau), a, b, str(certificate), True)
    if certificate not in (CycloElement(1), CycloElement(-1)):
        result.failures.append(f"certificate {certificate} is not +-1")
    for sample in samples:
        value = minor(sample.form, pqk.rows, pqk.cols)
        if value:
            result.vanishing = False
            result.failures.append(f"minor {value} at u_seed={sample.u_seed}")
            break
    return result
