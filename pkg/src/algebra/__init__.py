"""Algebra construction and analysis."""
