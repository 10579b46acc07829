"""Tests for quivers, algebras, maps and reports."""
