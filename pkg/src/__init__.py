"""Derivatio - dual extensions of path algebras and their Lie derivations."""

__version__ = "0.1.0"
