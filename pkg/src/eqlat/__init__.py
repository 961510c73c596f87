"""Exact-arithmetic toolkit for Euclidean lattices and equiangular lines."""

__version__ = "0.1.0"
