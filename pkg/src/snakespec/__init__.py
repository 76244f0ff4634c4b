"""Exact spectral and matching computations for snake graphs."""

__version__ = "0.1.0"
