"""Tests for settings and config file loading."""
