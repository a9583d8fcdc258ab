"""Exact backtracking for Hamilton cycles, Hamilton paths and longest paths.

Every search walks neighbours in ascending order, so the certificate found
for a graph is always the same one.  A branch is cut when some unvisited
vertex can no longer get the path-neighbours it needs, or when the
unvisited vertices are not all reachable from the growing end.
"""

from __future__ import annotations

import dataclasses
import itertools
import logging

from fan_tilde.errors import PreconditionError
from fan_tilde.graph_core.connectivity import is_connected
from fan_tilde.graph_core.connectivity import is_k_connected
from fan_tilde.graph_core.connectivity import reach
from fan_tilde.graph_core.graph import iter_bits
from fan_tilde.ham_solver.paths import CYCLE
from fan_tilde.ham_solver.paths import PATH
from fan_tilde.ham_solver.paths import HamCertificate
from fan_tilde.ham_solver.paths import OrientedPath

TYPE_CHECKING = False
if TYPE_CHECKING:
    from fan_tilde.graph_core.graph import Graph

_log = logging.getLogger(__name__)


def _starved(g: Graph, remaining: int, ends: int, final: int = 0) -> bool:
    """True when a remaining vertex has too few usable neighbours.

    Inner vertices need two neighbours among ``remaining | ends``; the
    vertex in ``final`` closes the walk and needs only one.
    """
    usable = remaining | ends
    for w in iter_bits(remaining):
        need = 1 if final >> w & 1 else 2
        if (g.adj[w] & usable).bit_count() < need:
            return True
    return False


def _cycle_search(g: Graph, verts: list[int], remaining: int) -> bool:
    cur = verts[-1]
    start = verts[0]
    if not remaining:
        return bool(g.adj[cur] >> start & 1)
    cur_bit = 1 << cur
    if len(verts) > 1 and not g.adj[start] & remaining:
        return False
    if _starved(g, remaining, cur_bit | 1 << start):
        return False
    if reach(g, cur, remaining | cur_bit) != remaining | cur_bit:
        return False
    for w in iter_bits(g.adj[cur] & remaining):
        verts.append(w)
        if _cycle_search(g, verts, remaining & ~(1 << w)):
            return True
        verts.pop()
    return False


def hamilton_cycle(g: Graph) -> HamCertificate | None:
    """A Hamilton cycle rooted at vertex 0, or None when g has none."""
    if g.n < 3 or g.min_degree < 2 or not is_k_connected(g, 2):
        return None
    verts = [0]
    if _cycle_search(g, verts, g.all_mask & ~1):
        _log.debug("Hamilton cycle %s", verts)
        return HamCertificate(CYCLE, tuple(verts))
    return None


def _path_search(g: Graph, verts: list[int], remaining: int, y: int) -> bool:
    cur = verts[-1]
    y_bit = 1 << y
    if remaining == y_bit:
        if g.adj[cur] & y_bit:
            verts.append(y)
            return True
        return False
    cur_bit = 1 << cur
    if _starved(g, remaining, cur_bit, final=y_bit):
        return False
    if reach(g, cur, remaining | cur_bit) != remaining | cur_bit:
        return False
    for w in iter_bits(g.adj[cur] & remaining & ~y_bit):
        verts.append(w)
        if _path_search(g, verts, remaining & ~(1 << w), y):
            return True
        verts.pop()
    return False


def hamilton_path_between(g: Graph, x: int, y: int) -> HamCertificate | None:
    """A Hamilton path from x to y, or None when there is none."""
    g.check_vertex(x)
    g.check_vertex(y)
    if x == y:
        raise PreconditionError(f"Hamilton path endpoints must differ, got {x} twice")
    if not is_connected(g):
        return None
    verts = [x]
    if _path_search(g, verts, g.all_mask & ~(1 << x), y):
        return HamCertificate(PATH, tuple(verts))
    return None


@dataclasses.dataclass(frozen=True)
class ConnectedResult:
    """Outcome of the all-pairs check.

    Attributes:
        holds : True when every pair is joined by a Hamilton path.
        failing_pair : The lexicographically first pair without one.
        paths : The Hamilton path found for every pair checked before stopping.

    """

    holds: bool
    failing_pair: tuple[int, int] | None = None
    paths: dict[tuple[int, int], HamCertificate] = dataclasses.field(default_factory=dict)

    def __bool__(self) -> bool:
        return self.holds

    @property
    def details(self) -> dict[str, object]:
        return {
            "holds": self.holds,
            "failing_pair": None if self.failing_pair is None else list(self.failing_pair),
            "paths": {f"{x}-{y}": list(cert.verts) for (x, y), cert in self.paths.items()},
        }


def is_hamiltonian_connected(g: Graph) -> ConnectedResult:
    paths = {}
    for x, y in itertools.combinations(range(g.n), 2):
        cert = hamilton_path_between(g, x, y)
        if cert is None:
            _log.debug("no Hamilton path between %d and %d", x, y)
            return ConnectedResult(False, (x, y), paths)
        paths[x, y] = cert
    return ConnectedResult(True, None, paths)


class _LongestSearch:
    """Depth-first search for the longest path, with a reachability bound."""

    def __init__(self, g: Graph):
        self.g = g
        self.best: list[int] = []

    @property
    def done(self) -> bool:
        return len(self.best) == self.g.n

    def _bound(self, ends: tuple[int, ...], length: int, visited: int) -> int:
        free = self.g.all_mask & ~visited
        extra = 0
        for end in ends:
            extra |= reach(self.g, end, free | 1 << end) & free
        return length + extra.bit_count()

    def _record(self, verts: list[int]) -> None:
        if len(verts) > len(self.best):
            self.best = list(verts)

    def tail(self, verts: list[int], visited: int, with_head: bool) -> None:
        self._record(verts)
        if with_head:
            self.head([], verts, visited)
        if self.done or self._bound((verts[0], verts[-1]) if with_head else (verts[-1],),
                                    len(verts), visited) <= len(self.best):
            return
        for w in iter_bits(self.g.adj[verts[-1]] & ~visited):
            verts.append(w)
            self.tail(verts, visited | 1 << w, with_head)
            verts.pop()
            if self.done:
                return

    def head(self, front: list[int], core: list[int], visited: int) -> None:
        """Prepend vertices in front of ``core``; ``front`` is stored outward."""
        if front:
            self._record(front[::-1] + core)
        end = front[-1] if front else core[0]
        if self.done or self._bound((end,), len(front) + len(core), visited) <= len(self.best):
            return
        for w in iter_bits(self.g.adj[end] & ~visited):
            front.append(w)
            self.head(front, core, visited | 1 << w)
            front.pop()
            if self.done:
                return


def longest_path_from(g: Graph, seed: OrientedPath) -> OrientedPath:
    """A longest path of g, grown from ``seed`` at both ends where possible.

    The seed stays a contiguous block of the result unless no maximum-length
    path contains it that way; then a maximum path found from scratch is
    returned instead.
    """
    if seed.virtual is not None:
        raise PreconditionError("seed path carries a virtual edge")
    if seed.host != g:
        raise PreconditionError("seed path belongs to another graph")
    search = _LongestSearch(g)
    search.tail(list(seed.verts), seed.mask, with_head=True)
    grown = search.best
    if not search.done:
        for start in range(g.n):
            search.tail([start], 1 << start, with_head=False)
            if search.done:
                break
    if len(search.best) > len(grown):
        _log.debug("seed %s is not inside a longest path", seed.verts)
    return OrientedPath(g, tuple(search.best))
