"""Elliptic curve pseudorandom sequences and their linear complexity."""

from ._backend import BACKEND

__version__ = "0.1.0"
__all__ = ["BACKEND", "__version__"]
