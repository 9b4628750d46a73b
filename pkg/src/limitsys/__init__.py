"""Limits of linear systems through monomial families, with exact checks."""

__version__ = "0.1.0"
