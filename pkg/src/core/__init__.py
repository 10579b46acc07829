"""Core kernels: logging, errors, exact arithmetic and the check contract."""
