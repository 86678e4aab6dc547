"""Exact R-matrices for first fundamental representations of twisted quantum
affine algebras."""

__version__ = "0.1.0"
