"""
Verification report model.

Every verifier produces the same self-describing document: the command, the
resolved configuration, the claims checked, the instance count, the list of
failures and free-form details. Serialization sorts keys and carries no
timestamps, so equal configurations give byte-identical output.
"""

from __future__ import annotations

import json
from pathlib import Path

from pydantic import BaseModel, Field


class VerificationReport(BaseModel):
    """JSON report emitted by every verify command."""

    command: str
    config: dict[str, object] = Field(default_factory=dict)
    claim_refs: list[str] = Field(default_factory=list)
    instances: int = Field(default=0, ge=0)
    failures: list[object] = Field(default_factory=list)
    details: dict[str, object] = Field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.failures

    @property
    def exit_code(self) -> int:
        return 0 if self.passed else 1

    def add_failure(self, failure: object) -> None:
        self.failures.append(failure)

    def to_json(self, indent: int | None = 2) -> str:
        return json.dumps(self.model_dump(mode="json"), sort_keys=True, indent=indent)

    def write(self, path: Path, indent: int | None = 2) -> None:
        path.write_text(self.to_json(indent) + "\n")
