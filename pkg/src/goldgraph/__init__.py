"""Oriented bipartite graphs, bitournaments, odd-even graphs and the Goldbach graph."""

__version__ = "0.1.0"
