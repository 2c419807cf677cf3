"""Distributed-style graph coloring via connectors: clique-decomposition
vertex coloring, star-partition edge coloring, and arboricity-driven
edge coloring, with a synchronous round simulator and verification oracles."""

__version__ = "0.1.0"
