"""Exact arithmetic for walled Brauer algebras, their cell modules and branching rules."""

__version__ = "1.0.0"
