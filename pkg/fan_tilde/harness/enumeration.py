"""Graph sources for corpus runs: every labelled graph, graph6 files, G(n, p)."""

from __future__ import annotations

import itertools
import random
from pathlib import Path

from fan_tilde.errors import PreconditionError
from fan_tilde.graph_core.formats import read_graphs
from fan_tilde.graph_core.graph import Graph

TYPE_CHECKING = False
if TYPE_CHECKING:
    from collections.abc import Iterator

MAX_LABELED_ORDER = 7


def _column_pairs(n: int) -> list[tuple[int, int]]:
    """Vertex pairs in graph6 bit order."""
    return [(i, j) for j in range(1, n) for i in range(j)]


def count_labeled_graphs(n: int) -> int:
    return 2 ** (n * (n - 1) // 2)


def enumerate_labeled_graphs(n: int) -> Iterator[Graph]:
    """All labelled graphs on n vertices; bit b of the edge mask is pair b in graph6 order."""
    if not 1 <= n <= MAX_LABELED_ORDER:
        raise PreconditionError(f"labelled enumeration covers 1..{MAX_LABELED_ORDER} vertices, not {n}")
    pairs = _column_pairs(n)
    for mask in range(count_labeled_graphs(n)):
        adj = [0] * n
        for b, (i, j) in enumerate(pairs):
            if mask >> b & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
        yield Graph(n, tuple(adj))


def random_graphs(count: int, n: int, p: float, seed: int) -> Iterator[Graph]:
    """``count`` samples of G(n, p) from ``random.Random(seed)``."""
    if not 0.0 <= p <= 1.0:
        raise PreconditionError(f"edge probability {p} outside [0, 1]")
    if count < 0:
        raise PreconditionError(f"sample count must be non-negative, not {count}")
    rng = random.Random(seed)
    for _ in range(count):
        edges = [pair for pair in itertools.combinations(range(n), 2) if rng.random() < p]
        yield Graph.from_edges(n, edges)


def graphs_from_file(path: Path, fmt: str = "auto") -> list[Graph]:
    return read_graphs(Path(path).read_text(encoding="utf-8"), fmt)
