"""Core module initialization"""

from thompx.core.config import Config, get_config, reload_config
from thompx.core.errors import (
    CircuitError,
    CodeError,
    CompileError,
    ErrorCode,
    GeneratorError,
    MetricsError,
    TableError,
    ThompxError,
)
from thompx.core.logging import configure_logging

__all__ = [
    "Config",
    "get_config",
    "reload_config",
    "configure_logging",
    "ErrorCode",
    "ThompxError",
    "CodeError",
    "TableError",
    "GeneratorError",
    "CircuitError",
    "CompileError",
    "MetricsError",
]
