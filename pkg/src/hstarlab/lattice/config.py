"""Resource caps for the brute-force oracle."""

from __future__ import annotations

from contextlib import contextmanager
from dataclasses import dataclass


@dataclass
class Limits:
    max_dim: int = 9
    max_box: int = 10**8
    max_graph_vertices: int = 12


LIMITS = Limits()


@contextmanager
def limits(**overrides):
    """Temporarily override fields of :data:`LIMITS`."""
    saved = {k: getattr(LIMITS, k) for k in overrides}
    for k, v in overrides.items():
        if not hasattr(LIMITS, k):
            raise AttributeError(k)
        setattr(LIMITS, k, v)
    try:
        yield LIMITS
    finally:
        for k, v in saved.items():
            setattr(LIMITS, k, v)
