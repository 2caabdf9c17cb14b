import json
from pathlib import Path

from bruhat_orbits.verify.report import VerificationReport


def test_exit_code_follows_failures() -> None:
    report = VerificationReport(command="verify dim")
    assert report.passed
    assert report.exit_code == 0

    report.add_failure({"involution": "2,1"})

    assert not report.passed
    assert report.exit_code == 1


def test_json_is_key_sorted_and_stable() -> None:
    report = VerificationReport(
        command="verify thm15",
        config={"rank": 3, "type_tag": "C"},
        claim_refs=["involution-order-by-lower-ranks"],
        instances=400,
        details={"z": 1, "a": 2},
    )

    text = report.to_json()
    data = json.loads(text)

    assert list(data) == ["claim_refs", "command", "config", "details", "failures", "instances"]
    assert list(data["details"]) == ["a", "z"]
    assert text == report.to_json()


def test_write(tmp_path: Path) -> None:
    path = tmp_path / "report.json"
    VerificationReport(command="bruhat", instances=1).write(path, indent=None)

    assert json.loads(path.read_text())["instances"] == 1
