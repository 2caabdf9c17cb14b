"""Verification suites and their JSON reports."""

from bruhat_orbits.verify.report import VerificationReport

__all__ = ["VerificationReport"]
