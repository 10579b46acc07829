"""Tests for Derivatio."""
