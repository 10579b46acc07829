"""Configurable logging for the toolkit."""

import logging
import sys
from pathlib import Path
from typing import Optional


ROOT_LOGGER = 'derivatio'


def setup_logging(
    log_level: str = "INFO",
    log_file: Optional[Path] = None,
    detailed: bool = True
) -> logging.Logger:
    """Set up logging configuration.
    
    Console output goes to stderr so that JSON written to stdout stays
    machine-readable.
    
    Args:
        log_level: Logging level (DEBUG, INFO, WARNING, ERROR, CRITICAL)
        log_file: Optional path to an additional log file
        detailed: If True, use detailed format with timestamps and logger names
        
    Returns:
        Configured root logger instance
    """
    numeric_level = getattr(logging, log_level.upper(), logging.INFO)
    
    logger = logging.getLogger(ROOT_LOGGER)
    logger.setLevel(numeric_level)
    
    # Remove existing handlers to avoid duplicates
    logger.handlers.clear()
    
    if detailed:
        formatter = logging.Formatter(
            '%(asctime)s - %(name)s - %(levelname)s - %(message)s',
            datefmt='%Y-%m-%d %H:%M:%S'
        )
    else:
        formatter = logging.Formatter('%(levelname)s - %(message)s')
    
    console_handler = logging.StreamHandler(sys.stderr)
    console_handler.setLevel(numeric_level)
    console_handler.setFormatter(formatter)
    logger.addHandler(console_handler)
    
    if log_file is not None:
        log_file.parent.mkdir(parents=True, exist_ok=True)
        file_handler = logging.FileHandler(log_file, encoding='utf-8')
        file_handler.setLevel(numeric_level)
        file_handler.setFormatter(formatter)
        logger.addHandler(file_handler)
    
    return logger


def get_logger(name: Optional[str] = None) -> logging.Logger:
    """Get a logger instance.
    
    Args:
        name: Optional logger name (defaults to the root 'derivatio' logger)
        
    Returns:
        Logger instance
    """
    if name:
        return logging.getLogger(f'{ROOT_LOGGER}.{name}')
    return logging.getLogger(ROOT_LOGGER)
