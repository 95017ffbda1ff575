"""Pathlet learning on musical-genre listening trajectories."""

__version__ = "0.1.0"
