"""Command-line front end: reports, transforms, tom-text I/O and partitions."""

from .cli import main

__all__ = ["main"]
