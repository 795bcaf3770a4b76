"""Exact arithmetic and evidence tools for realizing the Rubik's Cube group over Q."""

__version__ = "0.1.0"
