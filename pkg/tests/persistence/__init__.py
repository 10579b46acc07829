"""Tests for JSON dumps and map fixtures."""
