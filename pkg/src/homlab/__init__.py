"""Exact desk-scale experiments on graph homomorphisms and covers."""

from __future__ import annotations

__version__ = "0.1.0"
