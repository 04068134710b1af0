"""Command-line interface"""

from thompx.cli.main import cli

__all__ = ["cli"]
