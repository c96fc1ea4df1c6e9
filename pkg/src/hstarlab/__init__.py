"""Exact Ehrhart and h*-polynomial computations for locally anti-blocking lattice polytopes."""

__version__ = "0.1.0"
