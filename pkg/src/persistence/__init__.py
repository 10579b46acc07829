"""JSON dumps and map fixture files."""
