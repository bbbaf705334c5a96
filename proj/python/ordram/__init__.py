"""Ordered Ramsey numbers of hypergraph paths and matchings."""

from ordram._core import *  # noqa: F401,F403
from ordram._core import BudgetExceeded, Coloring, Hypergraph

__all__ = [name for name in dir() if not name.startswith("_")]
