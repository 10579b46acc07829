"""Bundled quivers, map fixtures and seeded random quivers."""
