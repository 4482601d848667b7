"""Knapp-Stein R-groups and elliptic tempered representations for quasi-split SU(n)."""

__version__ = "0.1.0"
