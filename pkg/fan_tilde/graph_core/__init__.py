from fan_tilde.graph_core.connectivity import distance
from fan_tilde.graph_core.connectivity import distance2_nonadjacent_pairs
from fan_tilde.graph_core.connectivity import is_connected
from fan_tilde.graph_core.connectivity import is_k_connected
from fan_tilde.graph_core.connectivity import vertex_connectivity
from fan_tilde.graph_core.formats import emit_edge_list
from fan_tilde.graph_core.formats import emit_graph6
from fan_tilde.graph_core.formats import parse_edge_list
from fan_tilde.graph_core.formats import parse_graph6
from fan_tilde.graph_core.formats import read_graphs
from fan_tilde.graph_core.graph import Graph
from fan_tilde.graph_core.graph import VertexSet

__all__ = [
    "Graph",
    "VertexSet",
    "distance",
    "distance2_nonadjacent_pairs",
    "emit_edge_list",
    "emit_graph6",
    "is_connected",
    "is_k_connected",
    "parse_edge_list",
    "parse_graph6",
    "read_graphs",
    "vertex_connectivity",
]
