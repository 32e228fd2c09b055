"""Executable duoidal categories, operads on level trees, and centers."""

__version__ = "0.1.0"
