from fan_tilde.bipartite_hole.holes import AlphaTildeResult
from fan_tilde.bipartite_hole.holes import BipartiteHole
from fan_tilde.bipartite_hole.holes import PropertyCheck
from fan_tilde.bipartite_hole.holes import alpha_tilde
from fan_tilde.bipartite_hole.holes import alpha_tilde_upper_bound_from_min_degree
from fan_tilde.bipartite_hole.holes import st_property_holds

__all__ = [
    "AlphaTildeResult",
    "BipartiteHole",
    "PropertyCheck",
    "alpha_tilde",
    "alpha_tilde_upper_bound_from_min_degree",
    "st_property_holds",
]
