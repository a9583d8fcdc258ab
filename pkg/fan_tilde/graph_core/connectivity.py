"""Distances, connectivity and the distance-two non-adjacent pairs."""

from __future__ import annotations

import itertools
import logging
import math

from fan_tilde.errors import PreconditionError
from fan_tilde.graph_core.graph import iter_bits

TYPE_CHECKING = False
if TYPE_CHECKING:
    from fan_tilde.graph_core.graph import Graph

_log = logging.getLogger(__name__)

# Subset removal is exact for any k but grows as C(n, k-1).
CHEAP_CONNECTIVITY = 3


def distance(g: Graph, u: int, v: int) -> int | float:
    """Breadth-first distance from u to v; ``math.inf`` across components."""
    g.check_vertex(u)
    g.check_vertex(v)
    if u == v:
        return 0
    seen = frontier = 1 << u
    steps = 0
    while frontier:
        steps += 1
        frontier = g.neighbourhood(frontier) & ~seen
        if frontier >> v & 1:
            return steps
        seen |= frontier
    return math.inf


def reach(g: Graph, start: int, within: int) -> int:
    """Bitset of vertices reachable from ``start`` inside the vertex mask ``within``."""
    seen = frontier = 1 << start
    while frontier:
        frontier = g.neighbourhood(frontier) & within & ~seen
        seen |= frontier
    return seen


def is_connected_within(g: Graph, within: int) -> bool:
    if not within:
        return True
    start = (within & -within).bit_length() - 1
    return reach(g, start, within) == within


def is_connected(g: Graph) -> bool:
    return is_connected_within(g, g.all_mask)


def is_k_connected(g: Graph, k: int) -> bool:
    """True iff n > k and removing any fewer than k vertices leaves g connected."""
    if k < 1:
        raise PreconditionError(f"connectivity level must be at least 1, not {k}")
    if g.n <= k:
        return False
    if k > CHEAP_CONNECTIVITY:
        _log.warning("is_k_connected(k=%d) on %d vertices removes every subset of size < k", k, g.n)
    everything = g.all_mask
    for size in range(k):
        for removed in itertools.combinations(range(g.n), size):
            mask = everything
            for v in removed:
                mask &= ~(1 << v)
            if not is_connected_within(g, mask):
                return False
    return True


def vertex_connectivity(g: Graph, limit: int = CHEAP_CONNECTIVITY) -> int:
    """Largest k <= limit with is_k_connected(g, k); 0 when none holds."""
    level = 0
    for k in range(1, limit + 1):
        if not is_k_connected(g, k):
            break
        level = k
    return level


def distance2_nonadjacent_pairs(g: Graph) -> list[tuple[int, int]]:
    pairs = []
    for x in range(g.n):
        row = g.adj[x]
        for y in iter_bits(g.all_mask & ~row & ~((2 << x) - 1)):
            if row & g.adj[y]:
                pairs.append((x, y))
    return pairs
