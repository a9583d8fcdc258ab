"""Immutable simple undirected graphs with bitset adjacency."""

from __future__ import annotations

import dataclasses
import functools
import itertools

from fan_tilde.errors import GraphFormatError
from fan_tilde.errors import GraphSizeError
from fan_tilde.errors import SelfLoopError
from fan_tilde.errors import VertexRangeError

TYPE_CHECKING = False
if TYPE_CHECKING:
    from collections.abc import Iterable, Iterator

# Adjacency rows are Python ints used as bitsets; 64 keeps every row a machine word.
MAX_VERTICES = 64


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the indices of set bits in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


@dataclasses.dataclass(frozen=True, order=True)
class VertexSet:
    """A set of vertices stored as a bitset over 0..n-1."""

    members: int = 0

    @classmethod
    def from_iterable(cls, vertices: Iterable[int]) -> VertexSet:
        return cls(mask_of(vertices))

    def __iter__(self) -> Iterator[int]:
        return iter_bits(self.members)

    def __len__(self) -> int:
        return self.members.bit_count()

    def __contains__(self, v: object) -> bool:
        return isinstance(v, int) and v >= 0 and bool(self.members >> v & 1)

    def __or__(self, other: VertexSet) -> VertexSet:
        return VertexSet(self.members | other.members)

    def __and__(self, other: VertexSet) -> VertexSet:
        return VertexSet(self.members & other.members)

    def __sub__(self, other: VertexSet) -> VertexSet:
        return VertexSet(self.members & ~other.members)

    def isdisjoint(self, other: VertexSet) -> bool:
        return not self.members & other.members

    @property
    def details(self) -> list[int]:
        return list(self)


@dataclasses.dataclass(frozen=True)
class Graph:
    """Simple undirected graph on the vertices 0..n-1.

    Attributes:
        n : Number of vertices, 1 <= n <= MAX_VERTICES.
        adj : Neighbour bitset of every vertex.

    """

    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if not 1 <= self.n <= MAX_VERTICES:
            raise GraphSizeError(f"graph order {self.n} outside 1..{MAX_VERTICES}")
        if len(self.adj) != self.n:
            raise GraphSizeError(f"{len(self.adj)} adjacency rows for {self.n} vertices")
        everything = (1 << self.n) - 1
        for u, row in enumerate(self.adj):
            if row & ~everything:
                raise VertexRangeError(f"vertex {u} has a neighbour outside 0..{self.n - 1}")
            if row >> u & 1:
                raise SelfLoopError(f"self-loop at vertex {u}")
            for v in iter_bits(row):
                if not self.adj[v] >> u & 1:
                    raise GraphFormatError(f"edge {u}-{v} is not symmetric")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        if not 1 <= n <= MAX_VERTICES:
            raise GraphSizeError(f"graph order {n} outside 1..{MAX_VERTICES}")
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise VertexRangeError(f"edge {u}-{v} leaves 0..{n - 1}")
            if u == v:
                raise SelfLoopError(f"self-loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, tuple(adj))

    @classmethod
    def empty(cls, n: int) -> Graph:
        return cls(n, (0,) * n)

    @classmethod
    def complete(cls, n: int) -> Graph:
        everything = (1 << n) - 1
        return cls(n, tuple(everything ^ (1 << v) for v in range(n)))

    @classmethod
    def cycle(cls, n: int) -> Graph:
        if n < 3:
            raise GraphSizeError(f"a cycle needs at least 3 vertices, not {n}")
        return cls.from_edges(n, ((v, (v + 1) % n) for v in range(n)))

    @classmethod
    def path(cls, n: int) -> Graph:
        return cls.from_edges(n, ((v, v + 1) for v in range(n - 1)))

    @classmethod
    def complete_bipartite(cls, a: int, b: int) -> Graph:
        return cls.empty(a).join(cls.empty(b))

    def check_vertex(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise VertexRangeError(f"vertex {v} outside 0..{self.n - 1}")

    @property
    def vertices(self) -> range:
        return range(self.n)

    @property
    def all_mask(self) -> int:
        return (1 << self.n) - 1

    def has_edge(self, u: int, v: int) -> bool:
        self.check_vertex(u)
        self.check_vertex(v)
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        self.check_vertex(v)
        return self.adj[v].bit_count()

    def neighbours(self, v: int) -> VertexSet:
        self.check_vertex(v)
        return VertexSet(self.adj[v])

    def neighbourhood(self, mask: int) -> int:
        """N(S) as a bitset: every vertex adjacent to some member of ``mask``."""
        out = 0
        for v in iter_bits(mask):
            out |= self.adj[v]
        return out

    @functools.cached_property
    def degrees(self) -> tuple[int, ...]:
        return tuple(row.bit_count() for row in self.adj)

    @property
    def min_degree(self) -> int:
        return min(self.degrees)

    @property
    def edge_count(self) -> int:
        return sum(self.degrees) // 2

    def edges(self) -> Iterator[tuple[int, int]]:
        """Every edge once as (u, v) with u < v, in lexicographic order."""
        for u in range(self.n):
            for v in iter_bits(self.adj[u] >> (u + 1)):
                yield u, u + 1 + v

    def non_edges(self) -> Iterator[tuple[int, int]]:
        for u, v in itertools.combinations(range(self.n), 2):
            if not self.adj[u] >> v & 1:
                yield u, v

    def with_edge(self, u: int, v: int) -> Graph:
        self.check_vertex(u)
        self.check_vertex(v)
        if u == v:
            raise SelfLoopError(f"self-loop at vertex {u}")
        adj = list(self.adj)
        adj[u] |= 1 << v
        adj[v] |= 1 << u
        return Graph(self.n, tuple(adj))

    def complement(self) -> Graph:
        everything = self.all_mask
        return Graph(self.n, tuple(everything & ~row & ~(1 << v) for v, row in enumerate(self.adj)))

    def union(self, other: Graph) -> Graph:
        """Disjoint union; ``other``'s vertices are shifted past ours."""
        shift = self.n
        return Graph(self.n + other.n, self.adj + tuple(row << shift for row in other.adj))

    def join(self, other: Graph) -> Graph:
        """Disjoint union plus every edge between the two parts."""
        ours = self.all_mask
        theirs = other.all_mask << self.n
        adj = [row | theirs for row in self.adj]
        adj.extend((row << self.n) | ours for row in other.adj)
        return Graph(self.n + other.n, tuple(adj))

    def is_clique(self, mask: int) -> bool:
        return all(self.adj[v] & mask == mask & ~(1 << v) for v in iter_bits(mask))
