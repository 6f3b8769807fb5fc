"""Exact combinatorics of the half-liberated orthogonal quantum group O_n*.

Brauer diagrams and their linear maps, the diagonal group L_n, twisted fusion
rules, Cayley graphs and ball growth.
"""

from .config import __version__

__all__ = ["__version__"]
