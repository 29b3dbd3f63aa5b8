"""Exact combinatorics of matings of unicritical polynomials."""

__version__ = "0.1.0"
