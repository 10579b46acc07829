"""Tests for the subcommands."""
