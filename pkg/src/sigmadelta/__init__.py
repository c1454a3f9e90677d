"""Exact tools for linear systems that mix a shift and a derivation."""

__version__ = "0.1.0"
