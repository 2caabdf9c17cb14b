"""User interface components for Bruhat Orbits."""
