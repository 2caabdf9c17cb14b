"""Orbit invariants, minors, dimensions and degenerations."""
