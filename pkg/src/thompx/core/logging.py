"""
Logging setup

Installs loguru sinks once per process; library modules just import
``from loguru import logger``.
"""

import sys
from typing import Optional

from loguru import logger

_FORMAT = (
    "<green>{time:HH:mm:ss}</green> | <level>{level: <8}</level> | "
    "<cyan>{name}</cyan> - {message}"
)


def configure_logging(level: str = "INFO", file: Optional[str] = None) -> None:
    """
    Route loguru output to stderr (and optionally a file)

    Args:
        level: Minimum level for the stderr sink
        file: Optional log file path, always written at DEBUG
    """
    logger.remove()
    logger.add(sys.stderr, level=level.upper(), format=_FORMAT)
    if file:
        logger.add(file, level="DEBUG", rotation="10 MB")
    logger.debug("Logging configured at {}", level.upper())
