"""Oriented paths, cycles and Hamilton certificates.

Positions on a path are 1-based, so ``p.v(1)`` is the first vertex and
``p.v(p.m)`` the last.  A path may carry one virtual adjacency between
positions k and k+1; that pair is not an edge of the host graph.
"""

from __future__ import annotations

import dataclasses
import functools

from fan_tilde.errors import PathError
from fan_tilde.graph_core.graph import mask_of

TYPE_CHECKING = False
if TYPE_CHECKING:
    from collections.abc import Sequence

    from fan_tilde.graph_core.graph import Graph

CYCLE = "cycle"
PATH = "path"


def _check_vertices(host: Graph, verts: Sequence[int]) -> None:
    if not verts:
        raise PathError("no vertices", check="empty")
    for v in verts:
        if not 0 <= v < host.n:
            raise PathError(f"vertex {v} outside 0..{host.n - 1}", check="vertex-range")
    if len(set(verts)) != len(verts):
        raise PathError(f"repeated vertex in {list(verts)}", check="distinct")


@dataclasses.dataclass(frozen=True)
class OrientedPath:
    """A path v_1, ..., v_m of distinct vertices in ``host``.

    Attributes:
        host : The graph the path lives in.
        verts : v_1, ..., v_m.
        virtual : k when v_k v_{k+1} is a virtual adjacency, else None.

    """

    host: Graph
    verts: tuple[int, ...]
    virtual: int | None = None

    def __post_init__(self):
        _check_vertices(self.host, self.verts)
        if self.virtual is not None:
            if not 1 <= self.virtual < len(self.verts):
                raise PathError(f"virtual position {self.virtual} outside 1..{len(self.verts) - 1}",
                                check="virtual-position")
            u, w = self.verts[self.virtual - 1], self.verts[self.virtual]
            if self.host.adj[u] >> w & 1:
                raise PathError(f"virtual pair {u}-{w} is a real edge", check="virtual-edge")
        for i, (u, w) in enumerate(zip(self.verts, self.verts[1:]), start=1):
            if i != self.virtual and not self.host.adj[u] >> w & 1:
                raise PathError(f"{u}-{w} at position {i} is not an edge", check="edge")

    @property
    def m(self) -> int:
        return len(self.verts)

    @property
    def first(self) -> int:
        return self.verts[0]

    @property
    def last(self) -> int:
        return self.verts[-1]

    @functools.cached_property
    def mask(self) -> int:
        return mask_of(self.verts)

    @functools.cached_property
    def _positions(self) -> dict[int, int]:
        return {v: i for i, v in enumerate(self.verts, start=1)}

    def v(self, i: int) -> int:
        if not 1 <= i <= self.m:
            raise IndexError(f"position {i} outside 1..{self.m}")
        return self.verts[i - 1]

    def position(self, vertex: int) -> int:
        return self._positions[vertex]

    def __contains__(self, vertex: object) -> bool:
        return vertex in self._positions

    def successor(self, vertex: int) -> int | None:
        """x+ on the path, None for the last vertex."""
        i = self._positions[vertex]
        return self.verts[i] if i < self.m else None

    def predecessor(self, vertex: int) -> int | None:
        """x- on the path, None for the first vertex."""
        i = self._positions[vertex]
        return self.verts[i - 2] if i > 1 else None

    def seg(self, a: int, b: int) -> tuple[int, ...]:
        """Vertices from position a to position b inclusive, walking either way."""
        if a <= b:
            return self.verts[a - 1:b]
        return tuple(reversed(self.verts[b - 1:a]))

    def reversed(self) -> OrientedPath:
        virtual = None if self.virtual is None else self.m - self.virtual
        return OrientedPath(self.host, self.verts[::-1], virtual)

    @property
    def is_spanning(self) -> bool:
        return self.m == self.host.n

    @property
    def details(self) -> dict[str, object]:
        out: dict[str, object] = {"kind": PATH, "verts": list(self.verts)}
        if self.virtual is not None:
            out["virtual"] = self.virtual
        return out


@dataclasses.dataclass(frozen=True)
class Cycle:
    """A cycle c_1, ..., c_m, c_1 with m >= 3."""

    host: Graph
    verts: tuple[int, ...]

    def __post_init__(self):
        _check_vertices(self.host, self.verts)
        if len(self.verts) < 3:
            raise PathError(f"a cycle needs 3 vertices, got {len(self.verts)}", check="cycle-length")
        closed = zip(self.verts, self.verts[1:] + self.verts[:1])
        for i, (u, w) in enumerate(closed, start=1):
            if not self.host.adj[u] >> w & 1:
                raise PathError(f"{u}-{w} at position {i} is not an edge", check="edge")

    @property
    def m(self) -> int:
        return len(self.verts)

    @functools.cached_property
    def mask(self) -> int:
        return mask_of(self.verts)

    @property
    def is_spanning(self) -> bool:
        return self.m == self.host.n

    @property
    def details(self) -> dict[str, object]:
        return {"kind": CYCLE, "verts": list(self.verts)}


@dataclasses.dataclass(frozen=True)
class HamCertificate:
    """A Hamilton cycle or Hamilton path, as a plain vertex sequence."""

    kind: str
    verts: tuple[int, ...]

    @property
    def endpoints(self) -> tuple[int, int]:
        return self.verts[0], self.verts[-1]

    def validate(self, g: Graph, endpoints: tuple[int, int] | None = None) -> None:
        """Re-check edge by edge; raises PathError naming the failed check."""
        if self.kind not in {CYCLE, PATH}:
            raise PathError(f"unknown certificate kind {self.kind!r}", check="kind")
        if len(self.verts) != g.n:
            raise PathError(f"{len(self.verts)} vertices, graph has {g.n}", check="spanning")
        if self.kind == CYCLE:
            Cycle(g, self.verts)
            return
        OrientedPath(g, self.verts)
        if endpoints is not None and set(self.endpoints) != set(endpoints):
            raise PathError(f"endpoints {self.endpoints}, expected {endpoints}", check="endpoints")

    def is_valid(self, g: Graph, endpoints: tuple[int, int] | None = None) -> bool:
        try:
            self.validate(g, endpoints)
        except PathError:
            return False
        return True

    @property
    def details(self) -> dict[str, object]:
        return {"kind": self.kind, "verts": list(self.verts)}
