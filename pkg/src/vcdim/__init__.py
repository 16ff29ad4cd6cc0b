"""Virtually cyclic geometric dimension of closed oriented 3-manifold groups."""

__version__ = "0.1.0"
