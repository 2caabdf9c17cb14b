from pathlib import Path

import pytest
from pydantic import ValidationError

from bruhat_orbits.core.config import RunConfig, Settings, xi_scalars
from bruhat_orbits.core.types import CartanType, EdgePolicy

DEFAULT_YAML = Path(__file__).resolve().parents[2] / "config" / "default.yaml"


def test_defaults() -> None:
    settings = Settings()
    assert settings.sampling.seed == 0
    assert settings.sampling.samples == 50
    assert settings.chains.policy is EdgePolicy.STRICT
    assert settings.limits.max_pair_rank == 5


def test_shipped_yaml_matches_the_defaults() -> None:
    assert Settings.from_yaml(DEFAULT_YAML) == Settings()


def test_environment_overrides(monkeypatch: pytest.MonkeyPatch) -> None:
    monkeypatch.setenv("BRUHAT_ORBITS_SAMPLING__SEED", "7")
    monkeypatch.setenv("BRUHAT_ORBITS_CHAINS__POLICY", "loose")

    settings = Settings()

    assert settings.sampling.seed == 7
    assert settings.chains.policy is EdgePolicy.LOOSE


def test_yaml_round_trip(tmp_path: Path) -> None:
    settings = Settings(debug=True)
    settings.sampling.samples = 3
    path = tmp_path / "settings.yaml"

    settings.to_yaml(path)

    assert Settings.from_yaml(path).sampling.samples == 3


def test_zero_xi_value_is_rejected() -> None:
    with pytest.raises(ValidationError):
        Settings(sampling={"xi_values": ["1", "0"]})


def test_xi_scalars_are_exact() -> None:
    assert [str(x) for x in xi_scalars(Settings())] == ["1", "4", "9/4", "-1", "2"]


def test_run_config_applies_overrides_and_limits() -> None:
    settings = Settings()

    run = RunConfig.from_settings(settings, type_tag="C", rank=3, seed=None, samples=4)

    assert run.type_tag is CartanType.C
    assert run.seed == 0
    assert run.samples == 4
    with pytest.raises(ValidationError):
        RunConfig.from_settings(settings, rank=6, rank_limit=5)


def test_report_view_drops_unset_and_internal_fields() -> None:
    run = RunConfig(type_tag="B", rank=2, rank_limit=7, output=Path("out.json"))
    view = run.report_view()

    assert view["type_tag"] == "B"
    assert "rank_limit" not in view
    assert "output" not in view
    assert "indices" not in view
