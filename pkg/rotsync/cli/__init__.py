"""CLI interface for rotsync."""

from .main import app, main

__all__ = ["app", "main"]
