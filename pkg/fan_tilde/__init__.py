"""Bipartite independence number, Fan-type hamiltonicity conditions and
certificate-producing Hamilton cycle and path construction for small graphs."""

__version__ = "1.0.0"
