"""Text front-ends."""
