"""Exact normality and integral-closure toolkit for monomial ideals."""

__version__ = "0.1.0"
