"""Command-line interface."""

from .main import build_parser, configure_logging, dispatch, emit, main

__all__ = ["build_parser", "configure_logging", "dispatch", "emit", "main"]
