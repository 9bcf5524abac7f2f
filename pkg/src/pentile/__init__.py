"""Exact-arithmetic Penrose substitution tilings."""

__version__ = "0.1.0"
