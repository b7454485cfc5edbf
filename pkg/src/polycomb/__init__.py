"""Exact combinatorics and linear optimisation over finite integer point sets."""

__version__ = "0.1.0"
