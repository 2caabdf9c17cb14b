import json
from pathlib import Path

import pytest
from click.testing import CliRunner, Result

from bruhat_orbits import __version__
from bruhat_orbits.ui.cli import cli

QUIET = {"BRUHAT_ORBITS_LOG_LEVEL": "WARNING"}


@pytest.fixture
def runner() -> CliRunner:
    return CliRunner()


def invoke(runner: CliRunner, *args: str) -> Result:
    return runner.invoke(cli, list(args), env=QUIET)


def test_version(runner: CliRunner) -> None:
    result = invoke(runner, "--version")
    assert result.exit_code == 0
    assert __version__ in result.output


def test_bruhat_reports_the_failing_entry(runner: CliRunner) -> None:
    result = invoke(
        runner, "bruhat", "--type", "B", "--rank", "4", "--lhs=1,-2,-3,4", "--rhs=-1,2,3,-4"
    )

    assert result.exit_code == 0
    report = json.loads(result.output)
    assert report["command"] == "bruhat"
    assert report["details"]["leq"] is False
    assert report["details"]["witness"]["kind"] == "rank_entry"
    assert report["failures"] == []


def test_bruhat_parity_witness(runner: CliRunner) -> None:
    result = invoke(runner, "bruhat", "--type", "D", "--rank", "2", "--lhs=2,1", "--rhs=-2,-1")

    report = json.loads(result.output)
    assert report["details"]["witness"] == {"kind": "parity", "a": 2, "b": 2}


def test_support(runner: CliRunner) -> None:
    result = invoke(runner, "support", "--type", "C", "--rank", "6", "--perm=3,-6,1,-4,-5,-2")

    assert result.exit_code == 0
    details = json.loads(result.output)["details"]
    assert details["support"] == ["e1-e3", "e2+e6", "2e4", "2e5"]
    assert details["d"] == 2
    assert details["basis"] is False


def test_support_of_a_non_basis_type_b_involution_fails(runner: CliRunner) -> None:
    result = invoke(runner, "support", "--type", "B", "--rank", "2", "--perm=-1,2")

    assert result.exit_code == 1
    assert "not well-defined" in result.output


def test_support_outside_type_c_has_no_d_statistic(runner: CliRunner) -> None:
    result = invoke(runner, "support", "--type", "B", "--rank", "3", "--perm=-3,2,-1")

    assert result.exit_code == 0
    details = json.loads(result.output)["details"]
    assert details["support"] == ["e1+e3"]
    assert "d" not in details


def test_rank_mismatch_is_a_usage_error(runner: CliRunner) -> None:
    result = invoke(runner, "bruhat", "--type", "B", "--rank", "3", "--lhs=1,2", "--rhs=2,1")
    assert result.exit_code == 2


def test_unknown_option_is_a_usage_error(runner: CliRunner) -> None:
    assert invoke(runner, "verify", "thm15", "--frobnicate").exit_code == 2
    assert invoke(runner, "verify", "nosuch").exit_code == 2


def test_rank_matrix_csv(runner: CliRunner) -> None:
    result = invoke(runner, "rank-matrix", "--type", "A", "--rank", "6", "--perm=4,2,5,1,3,6")

    assert result.exit_code == 0
    lines = result.output.splitlines()
    assert lines[0] == ",1,2,3,4,5,6"
    assert lines[1] == "1,1,2,3,4,5,6"
    assert lines[5] == "5,0,0,1,1,1,2"


def test_rank_matrix_to_file(runner: CliRunner, tmp_path: Path) -> None:
    out = tmp_path / "rank.csv"
    args = ("rank-matrix", "--type", "C", "--rank", "2", "--perm=2,1", "--star")

    result = invoke(runner, *args, "--out", str(out))

    assert result.exit_code == 0
    assert out.read_text().splitlines()[0] == ",1,2,-2,-1"


def test_orbit_sample_is_reproducible(runner: CliRunner) -> None:
    args = ("orbit-sample", "--type", "B", "--rank", "2", "--support", "e1-e2", "--samples", "2")

    first, second = invoke(runner, *args), invoke(runner, *args)

    assert first.exit_code == 0
    assert first.output == second.output
    report = json.loads(first.output)
    assert report["instances"] == 2
    assert report["details"]["samples"][0]["form"]["labels"] == [1, 2, 0, -2, -1]


def test_orbit_sample_rejects_foreign_roots(runner: CliRunner) -> None:
    result = invoke(runner, "orbit-sample", "--type", "B", "--rank", "2", "--support", "2e1")
    assert result.exit_code == 2


def test_verify_thm15(runner: CliRunner) -> None:
    result = invoke(runner, "verify", "thm15", "--rank", "3")

    assert result.exit_code == 0
    report = json.loads(result.output)
    assert report["instances"] == 400
    assert report["details"]["pairs_checked"] == 400
    assert report["claim_refs"] == ["involution-order-by-lower-ranks"]


def test_verify_ex23(runner: CliRunner) -> None:
    result = invoke(runner, "verify", "ex23")

    assert result.exit_code == 0
    assert json.loads(result.output)["failures"] == []


def test_verify_rejects_unsupported_type(runner: CliRunner) -> None:
    assert invoke(runner, "verify", "dim", "--type", "C").exit_code == 2


def test_verify_help_documents_the_dim_restriction(runner: CliRunner) -> None:
    result = invoke(runner, "verify", "--help")

    assert result.exit_code == 0
    assert "types B and D only" in result.output


def test_verify_rank_ceiling(runner: CliRunner) -> None:
    assert invoke(runner, "verify", "cor26", "--rank", "6").exit_code == 2


def test_verify_writes_the_report(runner: CliRunner, tmp_path: Path) -> None:
    out = tmp_path / "conj27.json"

    result = invoke(runner, "verify", "conj27", "--rank", "2", "--chains", "--out", str(out))

    assert result.exit_code == 0
    report = json.loads(out.read_text())
    assert report["command"] == "verify conj27"
    assert report["config"]["include_chains"] is True
    assert len(report["details"]["chains"]) == 3


def test_verify_output_is_deterministic(runner: CliRunner) -> None:
    args = ("verify", "pi-rank", "--rank", "2", "--samples", "2", "--seed", "9")
    assert invoke(runner, *args).output == invoke(runner, *args).output


def test_config_file(runner: CliRunner, tmp_path: Path) -> None:
    config = tmp_path / "settings.yaml"
    config.write_text("output:\n  indent: 0\nlog_level: WARNING\n")

    result = runner.invoke(cli, ["--config", str(config), "verify", "ex23"])

    assert result.exit_code == 0
    assert json.loads(result.output)["command"] == "verify ex23"


def test_invalid_config_file_is_a_usage_error(runner: CliRunner, tmp_path: Path) -> None:
    config = tmp_path / "settings.yaml"
    config.write_text("sampling:\n  samples: -3\n")

    result = invoke(runner, "--config", str(config), "verify", "ex23")

    assert result.exit_code == 2


def test_poset_export(runner: CliRunner) -> None:
    result = invoke(runner, "poset", "export", "--dot", "--type", "C", "--rank", "2")

    assert result.exit_code == 0
    assert result.output.startswith("digraph bruhat {")
    assert '"1,2" -> "2,1";' in result.output


def test_poset_export_needs_dot(runner: CliRunner) -> None:
    assert invoke(runner, "poset", "export", "--type", "C", "--rank", "2").exit_code == 2
