"""
Command-Line Interface for Bruhat Orbits.

Provides commands for comparing signed permutations, reading supports and
rank matrices, sampling orbit points, running the verification suites and
exporting Bruhat posets. Reports go to stdout as JSON; logs go to stderr.
"""

from __future__ import annotations

import logging
import sys
from collections.abc import Callable
from functools import wraps
from pathlib import Path
from typing import TYPE_CHECKING, TypeVar, cast

import click
import structlog

from bruhat_orbits import __version__
from bruhat_orbits.core.exceptions import BruhatOrbitsError, ConfigError

if TYPE_CHECKING:
    from bruhat_orbits.core.config import Settings
    from bruhat_orbits.verify.report import VerificationReport
    from bruhat_orbits.weyl.signed_perm import SignedPermutation

logger = structlog.get_logger()

F = TypeVar("F", bound=Callable[..., None])

TYPE_CHOICE = click.Choice(["A", "B", "C", "D"], case_sensitive=False)

SUITE_NAMES = (
    "case112",
    "conj27",
    "cor26",
    "dim",
    "ex23",
    "ex28",
    "oracle",
    "pi-rank",
    "prop24",
    "thm15",
    "thm25",
)


def _handle_errors(command: F) -> F:
    """ConfigError becomes a usage error (exit 2); other domain errors exit 1."""

    @wraps(command)
    def wrapper(*args: object, **kwargs: object) -> None:
        try:
            command(*args, **kwargs)
        except ConfigError as e:
            raise click.UsageError(e.message) from e
        except BruhatOrbitsError as e:
            click.echo(f"Error: {e.message}", err=True)
            sys.exit(1)

    return cast(F, wrapper)


def _settings(ctx: click.Context) -> Settings:
    from pydantic import ValidationError

    from bruhat_orbits.core.config import Settings

    try:
        if ctx.obj.get("config_path"):
            settings = Settings.from_yaml(ctx.obj["config_path"])
        else:
            settings = Settings()
    except ValidationError as exc:
        raise ConfigError(f"invalid configuration: {exc.errors()[0]['msg']}") from exc
    settings.debug = ctx.obj.get("debug", False)
    if not settings.debug:
        level = logging.getLevelName(settings.log_level.upper())
        if isinstance(level, int):
            structlog.configure(
                wrapper_class=structlog.make_filtering_bound_logger(level),
                logger_factory=structlog.PrintLoggerFactory(file=sys.stderr),
            )
    return settings


def _emit(report: VerificationReport, out: str | None, indent: int) -> None:
    """Write a report to ``out`` or stdout and exit with its status."""
    if out:
        report.write(Path(out), indent)
        logger.info("Report written", path=out, failures=len(report.failures))
    else:
        click.echo(report.to_json(indent))
    sys.exit(report.exit_code)


def _parse_perm(text: str, type_tag: str, rank: int) -> SignedPermutation:
    from bruhat_orbits.core.exceptions import InvalidPermutationError
    from bruhat_orbits.core.types import CartanType
    from bruhat_orbits.weyl.signed_perm import SignedPermutation

    try:
        perm = SignedPermutation.parse(text, CartanType(type_tag.upper()))
    except InvalidPermutationError as e:
        raise ConfigError(e.message) from e
    if perm.n != rank:
        raise ConfigError(f"permutation '{text}' has rank {perm.n}, expected {rank}")
    return perm


def _parse_indices(text: str | None) -> tuple[int, ...] | None:
    if text is None:
        return None
    try:
        return tuple(int(part) for part in text.split(",") if part.strip())
    except ValueError:
        raise ConfigError(f"cannot parse indices from '{text}'") from None


@click.group()
@click.version_option(version=__version__)
@click.option("--debug", is_flag=True, help="Enable debug logging")
@click.option(
    "--config",
    type=click.Path(exists=True),
    help="Path to configuration file",
)
@click.pass_context
def cli(ctx: click.Context, debug: bool, config: str | None) -> None:
    """
    Bruhat Orbits - Bruhat order and Borel orbits of involutions.

    Exact computations in the Weyl groups of types A, B, C and D and in the
    matching matrix Lie algebras over Q(zeta_8).
    """
    ctx.ensure_object(dict)

    # Configure logging; stdout carries only reports
    log_level = logging.DEBUG if debug else logging.INFO
    structlog.configure(
        wrapper_class=structlog.make_filtering_bound_logger(log_level),
        logger_factory=structlog.PrintLoggerFactory(file=sys.stderr),
    )

    ctx.obj["debug"] = debug
    ctx.obj["config_path"] = Path(config) if config else None


@cli.command()
@click.option("--type", "type_tag", type=TYPE_CHOICE, required=True, help="Cartan type")
@click.option("--rank", type=click.IntRange(min=1), required=True, help="Rank n")
@click.option("--lhs", required=True, help="Images of v, e.g. -2,1,3")
@click.option("--rhs", required=True, help="Images of w")
@click.pass_context
@_handle_errors
def bruhat(ctx: click.Context, type_tag: str, rank: int, lhs: str, rhs: str) -> None:
    """Decide v <= w in the Bruhat order."""
    from bruhat_orbits.core.config import RunConfig
    from bruhat_orbits.verify.report import VerificationReport
    from bruhat_orbits.weyl.bruhat_order import compare_bruhat

    settings = _settings(ctx)
    v, w = _parse_perm(lhs, type_tag, rank), _parse_perm(rhs, type_tag, rank)
    comparison = compare_bruhat(v, w)
    run = RunConfig(type_tag=type_tag.upper(), rank=rank)
    report = VerificationReport(
        command="bruhat",
        config=run.report_view(),
        instances=1,
        details={
            "lhs": lhs,
            "rhs": rhs,
            "leq": comparison.leq,
            "witness": comparison.witness(),
        },
    )
    _emit(report, None, settings.output.indent)


@cli.command()
@click.option("--type", "type_tag", type=TYPE_CHOICE, required=True, help="Cartan type")
@click.option("--rank", type=click.IntRange(min=1), required=True, help="Rank n")
@click.option("--perm", required=True, help="Images of an involution")
@click.pass_context
@_handle_errors
def support(ctx: click.Context, type_tag: str, rank: int, perm: str) -> None:
    """Print the support of an involution."""
    from bruhat_orbits.core.config import RunConfig
    from bruhat_orbits.core.types import CartanType
    from bruhat_orbits.verify.report import VerificationReport
    from bruhat_orbits.weyl.involution import Involution
    from bruhat_orbits.weyl.root_system import format_roots

    settings = _settings(ctx)
    w = Involution(_parse_perm(perm, type_tag, rank))
    details: dict[str, object] = {
        "perm": w.perm.format(),
        "support": format_roots(w.support),
        "basis": w.basis,
    }
    if w.cartan is CartanType.C:
        details["d"] = w.d
    report = VerificationReport(
        command="support",
        config=RunConfig(type_tag=type_tag.upper(), rank=rank).report_view(),
        instances=1,
        details=details,
    )
    _emit(report, None, settings.output.indent)


@cli.command("rank-matrix")
@click.option("--type", "type_tag", type=TYPE_CHOICE, required=True, help="Cartan type")
@click.option("--rank", type=click.IntRange(min=1), required=True, help="Rank n")
@click.option("--perm", required=True, help="Images of w")
@click.option("--star", is_flag=True, help="Strictly-lower truncation R_w^*")
@click.option("--out", type=click.Path(dir_okay=False), help="CSV output path")
@click.pass_context
@_handle_errors
def rank_matrix_command(
    ctx: click.Context, type_tag: str, rank: int, perm: str, star: bool, out: str | None
) -> None:
    """Export R_w (or R_w^*) as CSV."""
    from bruhat_orbits.ui.export import rank_matrix_csv
    from bruhat_orbits.weyl.bruhat_order import rank_matrix

    w = _parse_perm(perm, type_tag, rank)
    matrix = rank_matrix(w)
    text = rank_matrix_csv(matrix.star() if star else matrix)
    if out:
        Path(out).write_text(text)
        logger.info("Rank matrix written", path=out)
    else:
        click.echo(text, nl=False)


@cli.command("orbit-sample")
@click.option("--type", "type_tag", type=TYPE_CHOICE, required=True, help="Cartan type")
@click.option("--rank", type=click.IntRange(min=1), required=True, help="Rank n")
@click.option("--support", "roots", required=True, help="Roots, e.g. e1-e2,e3+e4")
@click.option("--samples", type=click.IntRange(min=0), help="Number of samples")
@click.option("--seed", type=click.IntRange(min=0), help="64-bit seed")
@click.option("--bound", type=click.IntRange(min=0), help="Coefficient bound")
@click.pass_context
@_handle_errors
def orbit_sample(
    ctx: click.Context,
    type_tag: str,
    rank: int,
    roots: str,
    samples: int | None,
    seed: int | None,
    bound: int | None,
) -> None:
    """Draw seeded points of the Borel orbit of f_D."""
    from pydantic import ValidationError

    from bruhat_orbits.core.config import RunConfig, xi_scalars
    from bruhat_orbits.core.exceptions import RootSystemError
    from bruhat_orbits.lie.sampling import orbit_samples
    from bruhat_orbits.ui.export import lie_matrix_rows
    from bruhat_orbits.verify.report import VerificationReport
    from bruhat_orbits.weyl.root_system import Root, RootSystem

    settings = _settings(ctx)
    try:
        run = RunConfig.from_settings(
            settings,
            type_tag=type_tag.upper(),
            rank=rank,
            samples=samples,
            seed=seed,
            coefficient_bound=bound,
            rank_limit=settings.limits.max_enumerative_rank,
        )
    except ValidationError as exc:
        raise ConfigError(exc.errors()[0]["msg"]) from exc
    assert run.type_tag is not None and run.rank is not None
    system = RootSystem(run.type_tag, run.rank)
    try:
        chosen = [system.require(root) for root in Root.parse_many(roots)]
    except RootSystemError as e:
        raise ConfigError(e.message) from e
    drawn = orbit_samples(
        system, chosen, run.samples, run.seed, run.coefficient_bound, xi_scalars(settings)
    )
    report = VerificationReport(
        command="orbit-sample",
        config=run.report_view(),
        instances=len(drawn),
        details={
            "samples": [
                {**sample.describe(), "form": lie_matrix_rows(sample.form)} for sample in drawn
            ]
        },
    )
    _emit(report, None, settings.output.indent)


@cli.command()
@click.argument("suite", type=click.Choice(SUITE_NAMES))
@click.option("--type", "type_tag", type=TYPE_CHOICE, help="Cartan type")
@click.option("--rank", type=click.IntRange(min=1), help="Rank n")
@click.option("--seed", type=click.IntRange(min=0), help="64-bit seed")
@click.option("--samples", type=click.IntRange(min=0), help="Samples per orbit")
@click.option("--bound", type=click.IntRange(min=0), help="Coefficient bound")
@click.option("--policy", type=click.Choice(["strict", "loose"]), help="Chain edge policy")
@click.option("--indices", help="Pattern indices i,k,j,l for case112")
@click.option("--limit", type=click.IntRange(min=1), help="Configurations per involution")
@click.option("--chains", is_flag=True, help="Attach a chain to every pair")
@click.option("--out", type=click.Path(dir_okay=False), help="JSON output path")
@click.pass_context
@_handle_errors
def verify(
    ctx: click.Context,
    suite: str,
    type_tag: str | None,
    rank: int | None,
    seed: int | None,
    samples: int | None,
    bound: int | None,
    policy: str | None,
    indices: str | None,
    limit: int | None,
    chains: bool,
    out: str | None,
) -> None:
    """
    Run a verification suite and emit its JSON report.

    \b
    dim compares orbit dimensions with lengths for basis involutions of
    types B and D only; other types are rejected as usage errors.
    """
    from bruhat_orbits.verify.suites import run_suite

    settings = _settings(ctx)
    report = run_suite(
        suite,
        settings,
        type_tag=type_tag.upper() if type_tag else None,
        rank=rank,
        seed=seed,
        samples=samples,
        coefficient_bound=bound,
        policy=policy,
        indices=_parse_indices(indices),
        limit=limit,
        include_chains=chains or None,
        output=out,
    )
    _emit(report, out, settings.output.indent)


@cli.group()
def poset() -> None:
    """Bruhat poset exports."""


@poset.command("export")
@click.option("--dot", is_flag=True, help="Emit DOT text")
@click.option("--type", "type_tag", type=TYPE_CHOICE, required=True, help="Cartan type")
@click.option("--rank", type=click.IntRange(min=1), required=True, help="Rank n")
@click.option("--all-involutions", is_flag=True, help="Include involutions with sign flips")
@click.option("--out", type=click.Path(dir_okay=False), help="DOT output path")
@click.pass_context
@_handle_errors
def poset_export(
    ctx: click.Context,
    dot: bool,
    type_tag: str,
    rank: int,
    all_involutions: bool,
    out: str | None,
) -> None:
    """Hasse diagram of basis involutions under the Bruhat order."""
    from bruhat_orbits.core.exceptions import RankLimitError
    from bruhat_orbits.core.types import CartanType
    from bruhat_orbits.ui.export import hasse_diagram, to_dot

    if not dot:
        raise ConfigError("poset export supports only --dot output")
    settings = _settings(ctx)
    limit = settings.limits.max_pair_rank
    if rank > limit:
        raise RankLimitError("poset export", rank, limit)
    graph = hasse_diagram(rank, CartanType(type_tag.upper()), basis_only=not all_involutions)
    text = to_dot(graph)
    if out:
        Path(out).write_text(text)
        logger.info("Hasse diagram written", path=out, nodes=graph.number_of_nodes())
    else:
        click.echo(text, nl=False)


def main() -> None:
    """Entry point for the CLI."""
    cli(obj={})


if __name__ == "__main__":
    main()
