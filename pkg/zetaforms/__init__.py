"""Hypergeometric linear forms in Hurwitz zeta values."""

__version__ = "0.1.0"
