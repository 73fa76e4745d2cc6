"""Exact computations in the derived category of a quiver path algebra."""

__version__ = "0.1.0"
