"""Verification engine and per-instance contexts."""
