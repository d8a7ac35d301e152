"""Exact Lie-combinatorial and cohomological tools for homogeneous spaces and
the splitting criteria for uniform flag bundles."""

__version__ = "0.1.0"
