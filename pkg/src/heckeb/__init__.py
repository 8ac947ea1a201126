"""Exact two-parameter Hecke algebras of type B and their tensor actions."""

__version__ = "0.1.0"
