"""
Verification suites behind the ``verify`` command.

Each suite resolves its configuration, runs one family of checks and returns
a VerificationReport. Suites never raise on a failed check: failures are
collected in the report and the exit status is derived from them. Misuse
(unsupported type or rank, malformed indices) raises ConfigError.
"""

from __future__ import annotations

import itertools
from collections.abc import Callable
from dataclasses import dataclass

import structlog
from pydantic import ValidationError

from bruhat_orbits.chains.classification import classify_pair
from bruhat_orbits.chains.reachability import (
    ReachabilityReport,
    table_collisions,
    verify_conjecture27,
    verify_corollary26,
)
from bruhat_orbits.core.config import RunConfig, Settings, xi_scalars
from bruhat_orbits.core.exceptions import ConfigError, ParityConditionError
from bruhat_orbits.core.types import CartanType
from bruhat_orbits.lie.sampling import OrbitSample, orbit_samples
from bruhat_orbits.orbits.degenerations import (
    EX28_TAU_ROOTS,
    DegenerationReport,
    case_1_12_target,
    degeneration_case_1_12,
    degeneration_ex23,
    vanishing_ex28,
)
from bruhat_orbits.orbits.dimension import orbit_dimension
from bruhat_orbits.orbits.invariants import (
    enumerate_minor_configurations,
    rank_profile_mismatches,
    separation_check,
)
from bruhat_orbits.orbits.minors import d_poly
from bruhat_orbits.verify.report import VerificationReport
from bruhat_orbits.weyl.bruhat_order import (
    bruhat_oracle,
    compare_bruhat,
    leq_bruhat,
    leq_star,
)
from bruhat_orbits.weyl.involution import Involution
from bruhat_orbits.weyl.root_system import Root, RootSystem
from bruhat_orbits.weyl.signed_perm import enumerate_group, enumerate_involutions

logger = structlog.get_logger()

# Type A ranks count letters: (A, 4) is the symmetric group on four letters
ORACLE_DEFAULT_GROUPS: tuple[tuple[CartanType, int], ...] = (
    (CartanType.A, 4),
    (CartanType.B, 3),
    (CartanType.C, 3),
    (CartanType.D, 3),
    (CartanType.D, 4),
)


@dataclass(frozen=True)
class Suite:
    """A verify subcommand with its defaults and accepted types."""

    name: str
    runner: Callable[[RunConfig, Settings], VerificationReport]
    claim_refs: tuple[str, ...]
    default_type: CartanType | None
    default_rank: int | None
    types: tuple[CartanType, ...]
    limit: str  # attribute of LimitsConfig bounding the rank

    def resolve(self, settings: Settings, **overrides: object) -> RunConfig:
        """Fill defaults, apply overrides and validate against the rank ceiling."""
        type_tag = overrides.pop("type_tag", None) or self.default_type
        rank = overrides.pop("rank", None) or self.default_rank
        if type_tag is not None and CartanType(type_tag) not in self.types:
            accepted = ", ".join(t.value for t in self.types)
            raise ConfigError(f"verify {self.name} accepts types {accepted}, got {type_tag}")
        try:
            return RunConfig.from_settings(
                settings,
                type_tag=type_tag,
                rank=rank,
                rank_limit=getattr(settings.limits, self.limit),
                **overrides,
            )
        except ValidationError as exc:
            raise ConfigError(f"verify {self.name}: {exc.errors()[0]['msg']}") from exc

    def run(self, settings: Settings, **overrides: object) -> VerificationReport:
        run = self.resolve(settings, **overrides)
        logger.info("Verification started", command=self.name, **run.report_view())
        report = self.runner(run, settings)
        report.claim_refs = list(self.claim_refs)
        logger.info(
            "Verification finished",
            command=self.name,
            instances=report.instances,
            failures=len(report.failures),
        )
        return report


def _new_report(name: str, run: RunConfig) -> VerificationReport:
    return VerificationReport(command=f"verify {name}", config=run.report_view())


def _system(run: RunConfig) -> RootSystem:
    assert run.type_tag is not None and run.rank is not None
    return RootSystem(run.type_tag, run.rank)


def _samples(run: RunConfig, settings: Settings, roots: frozenset[Root]) -> list[OrbitSample]:
    return orbit_samples(
        _system(run), roots, run.samples, run.seed, run.coefficient_bound, xi_scalars(settings)
    )


def _basis_involutions(run: RunConfig) -> list[Involution]:
    system = _system(run)
    return [
        Involution(w) for w in enumerate_involutions(system.n, system.cartan, basis_only=True)
    ]


def _absorb(report: VerificationReport, outcome: DegenerationReport) -> VerificationReport:
    report.instances = outcome.instances
    report.failures.extend(outcome.failures)
    report.details.update(outcome.details)
    return report


# =============================================================================
# Orbit suites
# =============================================================================


def run_dim(run: RunConfig, settings: Settings) -> VerificationReport:
    """
    Tangent-space dimension of the orbit of f_w against the length of w.

    The equality is claimed for basis involutions of types B and D, so the
    suite accepts only those; orbit_dimension itself works in type C too.
    """
    report = _new_report("dim", run)
    dimensions: dict[str, int] = {}
    for w in _basis_involutions(run):
        dimension, length = orbit_dimension(w), w.perm.length()
        dimensions[str(w)] = dimension
        report.instances += 1
        if dimension != length:
            report.add_failure({"involution": str(w), "dimension": dimension, "length": length})
    report.details["dimensions"] = dimensions
    return report


def run_pi_rank(run: RunConfig, settings: Settings) -> VerificationReport:
    """Block ranks of orbit samples against the strictly-lower rank matrix."""
    report = _new_report("pi-rank", run)
    involutions = _basis_involutions(run)
    for w in involutions:
        for sample in _samples(run, settings, w.support):
            report.instances += 1
            for row, col, actual, expected in rank_profile_mismatches(sample.form, w.perm):
                report.add_failure(
                    {
                        "involution": str(w),
                        "u_seed": sample.u_seed,
                        "cell": [row, col],
                        "actual": actual,
                        "expected": expected,
                    }
                )
    report.details["involutions"] = len(involutions)
    return report


def run_prop24(run: RunConfig, settings: Settings) -> VerificationReport:
    """Minor sums vanish on orbit samples for every valid configuration."""
    report = _new_report("prop24", run)
    per_involution: dict[str, int] = {}
    for w in _basis_involutions(run):
        try:
            configurations = list(enumerate_minor_configurations(w, limit=run.limit))
        except ParityConditionError as e:
            report.instances += 1
            report.add_failure({"involution": str(w), "a": e.a, "b": e.b, "failure": e.message})
            continue
        per_involution[str(w)] = len(configurations)
        if not configurations:
            continue
        samples = _samples(run, settings, w.support)
        for config in configurations:
            report.instances += 1
            for sample in samples:
                value = d_poly(sample.form, config.rows, config.paired, config.cols)
                if value:
                    report.add_failure(
                        {
                            "involution": str(w),
                            "configuration": config.describe(),
                            "u_seed": sample.u_seed,
                            "value": str(value),
                        }
                    )
                    break
        logger.debug("Configurations checked", involution=str(w), count=len(configurations))
    report.details["configurations"] = per_involution
    return report


def run_thm25(run: RunConfig, settings: Settings) -> VerificationReport:
    """
    Parity-clause failures are separated by a minor.

    Pairs with R_sigma <= R_tau but sigma not below tau are collected at the
    requested rank; when none exist the search moves up one rank.
    """
    report = _new_report("thm25", run)
    n = _system(run).n
    pairs: list[tuple[Involution, Involution]] = []
    ranks_tried = []
    while not pairs and n <= _system(run).n + 1:
        ranks_tried.append(n)
        basis = [
            Involution(w) for w in enumerate_involutions(n, CartanType.D, basis_only=True)
        ]
        pairs = [
            (sigma, tau)
            for sigma, tau in itertools.product(basis, repeat=2)
            if compare_bruhat(sigma.perm, tau.perm).parity_pair is not None
        ]
        n += 1
    report.details["ranks_tried"] = ranks_tried

    sample_cache: dict[frozenset[Root], list[OrbitSample]] = {}
    checked = []
    for sigma, tau in pairs:
        if tau.support not in sample_cache:
            sample_cache[tau.support] = orbit_samples(
                RootSystem(CartanType.D, tau.n),
                tau.support,
                run.samples,
                run.seed,
                run.coefficient_bound,
                xi_scalars(settings),
            )
        result = separation_check(sigma, tau, sample_cache[tau.support])
        report.instances += 1
        checked.append({"sigma": result.sigma, "tau": result.tau, "a": result.a, "b": result.b})
        for failure in result.failures:
            report.add_failure({"sigma": result.sigma, "tau": result.tau, "failure": failure})
    report.details["pairs"] = checked
    return report


def run_ex23(run: RunConfig, settings: Settings) -> VerificationReport:
    return _absorb(_new_report("ex23", run), degeneration_ex23(_system(run).n))


def run_ex28(run: RunConfig, settings: Settings) -> VerificationReport:
    if run.rank != 4:
        raise ConfigError(f"verify ex28 is a fixed B_4 scenario, got rank {run.rank}")
    samples = _samples(run, settings, frozenset(EX28_TAU_ROOTS))
    return _absorb(_new_report("ex28", run), vanishing_ex28(samples))


def run_case112(run: RunConfig, settings: Settings) -> VerificationReport:
    """The explicit degeneration for a pair of type 1.12, cross-checked with the tables."""
    report = _new_report("case112", run)
    system = _system(run)
    indices = run.indices or (1, 2, 3, 4)
    if len(indices) != 4:
        raise ConfigError(f"--indices needs four values i,k,j,l, got {list(indices)}")
    i, k, j, l = indices
    if not 1 <= i < k < j < l <= system.n:
        raise ConfigError(f"--indices must satisfy 1 <= i < k < j < l <= {system.n}")
    tau = Involution.from_roots([Root.diff(i, j), Root.sum(k, l)], system.n, system.cartan)
    _absorb(report, degeneration_case_1_12(tau, i, k, j, l))
    sigma = Involution.from_roots(case_1_12_target(tau, i, k, j, l), system.n, system.cartan)
    pair_type = classify_pair(tau, sigma)
    if pair_type is None or pair_type.label != "1.12":
        report.add_failure(f"tables classify the pair as {pair_type and pair_type.label}")
    return report


# =============================================================================
# Order and chain suites
# =============================================================================


def run_thm15(run: RunConfig, settings: Settings) -> VerificationReport:
    """Strictly-lower rank comparison agrees with the Bruhat order on involutions."""
    report = _new_report("thm15", run)
    system = _system(run)
    involutions = list(enumerate_involutions(system.n, system.cartan))
    for v, w in itertools.product(involutions, repeat=2):
        report.instances += 1
        star, full = leq_star(v, w), leq_bruhat(v, w)
        if star != full:
            report.add_failure({"lhs": v.format(), "rhs": w.format(), "star": star, "bruhat": full})
    report.details.update(involutions=len(involutions), pairs_checked=report.instances)
    return report


def run_oracle(run: RunConfig, settings: Settings) -> VerificationReport:
    """Rank-matrix Bruhat order against the closure of reflection covers."""
    report = _new_report("oracle", run)
    if (run.type_tag is None) != (run.rank is None):
        raise ConfigError("verify oracle needs both --type and --rank, or neither")
    groups = [(run.type_tag, run.rank)] if run.type_tag else list(ORACLE_DEFAULT_GROUPS)
    checked: dict[str, int] = {}
    for cartan, n in groups:
        assert cartan is not None and n is not None
        elements = list(enumerate_group(n, cartan))
        for v, w in itertools.product(elements, repeat=2):
            if leq_bruhat(v, w) != bruhat_oracle(v, w):
                report.add_failure(
                    {"group": f"{cartan.value}_{n}", "lhs": v.format(), "rhs": w.format()}
                )
        checked[f"{cartan.value}_{n}"] = len(elements) ** 2
        report.instances += len(elements) ** 2
    report.details["pairs_checked"] = checked
    return report


def _absorb_chains(report: VerificationReport, outcome: ReachabilityReport) -> VerificationReport:
    report.instances = outcome.pairs_checked
    report.failures.extend(chain.describe() for chain in outcome.failures)
    report.details.update(
        nodes=outcome.nodes,
        edges=outcome.edges,
        pairs_checked=outcome.pairs_checked,
        unordered_edges=outcome.unordered_edges,
    )
    if outcome.chains:
        report.details["chains"] = [chain.describe() for chain in outcome.chains]
    return report


def run_conj27(run: RunConfig, settings: Settings) -> VerificationReport:
    outcome = verify_conjecture27(_system(run).n, run.policy, run.include_chains)
    return _absorb_chains(_new_report("conj27", run), outcome)


def run_cor26(run: RunConfig, settings: Settings) -> VerificationReport:
    n = _system(run).n
    report = _absorb_chains(
        _new_report("cor26", run), verify_corollary26(n, run.policy, run.include_chains)
    )
    if n <= 4:
        found = table_collisions(n)
        report.details["table_collisions"] = len(found)
        for tau, sigma, matches in found:
            report.add_failure(
                {
                    "collision": [m.label for m in matches],
                    "tau": tau.format(),
                    "sigma": sigma.format(),
                }
            )
    return report


_SIGNED = (CartanType.B, CartanType.C, CartanType.D)
_HYPEROCTAHEDRAL = (CartanType.B, CartanType.C)

SUITES: dict[str, Suite] = {
    suite.name: suite
    for suite in (
        Suite(
            "dim",
            run_dim,
            ("orbit-dimension-equals-length",),
            CartanType.B,
            3,
            (CartanType.B, CartanType.D),
            "max_enumerative_rank",
        ),
        Suite(
            "pi-rank",
            run_pi_rank,
            ("orbit-rank-invariants",),
            CartanType.B,
            3,
            _SIGNED,
            "max_enumerative_rank",
        ),
        Suite(
            "prop24",
            run_prop24,
            ("minor-sum-vanishing",),
            CartanType.D,
            4,
            (CartanType.D,),
            "max_enumerative_rank",
        ),
        Suite(
            "thm25",
            run_thm25,
            ("parity-separation",),
            CartanType.D,
            4,
            (CartanType.D,),
            "max_pair_rank",
        ),
        Suite(
            "ex23",
            run_ex23,
            ("short-root-degeneration",),
            CartanType.B,
            4,
            (CartanType.B,),
            "max_enumerative_rank",
        ),
        Suite(
            "ex28",
            run_ex28,
            ("bruhat-below-not-in-closure",),
            CartanType.B,
            4,
            (CartanType.B,),
            "max_enumerative_rank",
        ),
        Suite(
            "case112",
            run_case112,
            ("type-1.12-degeneration",),
            CartanType.B,
            4,
            _HYPEROCTAHEDRAL,
            "max_enumerative_rank",
        ),
        Suite(
            "thm15",
            run_thm15,
            ("involution-order-by-lower-ranks",),
            CartanType.C,
            3,
            (CartanType.A, CartanType.B, CartanType.C),
            "max_pair_rank",
        ),
        Suite(
            "oracle",
            run_oracle,
            ("rank-criterion-matches-reflection-order",),
            None,
            None,
            (CartanType.A, *_SIGNED),
            "max_oracle_rank",
        ),
        Suite(
            "conj27",
            run_conj27,
            ("basis-admissible-chains",),
            CartanType.C,
            5,
            _HYPEROCTAHEDRAL,
            "max_enumerative_rank",
        ),
        Suite(
            "cor26",
            run_cor26,
            ("admissible-chains",),
            CartanType.C,
            3,
            _HYPEROCTAHEDRAL,
            "max_pair_rank",
        ),
    )
}


def run_suite(name: str, settings: Settings, **overrides: object) -> VerificationReport:
    """Run the suite called ``name`` with command-line overrides."""
    suite = SUITES.get(name)
    if suite is None:
        raise ConfigError(f"unknown verification suite '{name}'")
    return suite.run(settings, **overrides)

