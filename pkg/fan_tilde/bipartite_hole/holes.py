"""Exact bipartite independence number with hole certificates.

An (s, t)-bipartite hole is a pair of disjoint vertex sets A, B with
|A| = s, |B| = t and no edge between them.  The bipartite independence
number is the smallest q such that some s + t = q + 1 admits no hole.
"""

from __future__ import annotations

import dataclasses
import itertools
import logging

from fan_tilde.errors import FanTildeError
from fan_tilde.errors import PreconditionError
from fan_tilde.graph_core.graph import VertexSet
from fan_tilde.graph_core.graph import iter_bits

TYPE_CHECKING = False
if TYPE_CHECKING:
    from fan_tilde.graph_core.graph import Graph

_log = logging.getLogger(__name__)


def _lowest_bits(mask: int, count: int) -> int:
    out = 0
    for v in itertools.islice(iter_bits(mask), count):
        out |= 1 << v
    return out


@dataclasses.dataclass(frozen=True)
class BipartiteHole:
    a: VertexSet
    b: VertexSet

    @property
    def st(self) -> tuple[int, int]:
        return len(self.a), len(self.b)

    def swapped(self) -> BipartiteHole:
        return BipartiteHole(self.b, self.a)

    def problems(self, g: Graph) -> list[str]:
        """Everything that keeps this pair from being a hole of ``g``."""
        found = []
        if not self.a.members or not self.b.members:
            found.append("both sides must be non-empty")
        if not self.a.isdisjoint(self.b):
            found.append("sides overlap")
        if (self.a.members | self.b.members) & ~g.all_mask:
            found.append("vertex outside the graph")
        elif g.neighbourhood(self.a.members) & self.b.members:
            found.append("edge between the sides")
        return found

    def is_valid(self, g: Graph) -> bool:
        return not self.problems(g)

    @property
    def details(self) -> dict[str, object]:
        s, t = self.st
        return {"s": s, "t": t, "a": self.a.details, "b": self.b.details}


@dataclasses.dataclass(frozen=True)
class PropertyCheck:
    """Outcome of an (s, t) test; falsy when a hole was found."""

    s: int
    t: int
    holds: bool
    hole: BipartiteHole | None = None

    def __bool__(self) -> bool:
        return self.holds


@dataclasses.dataclass(frozen=True)
class AlphaTildeResult:
    """Bipartite independence number with its certificates.

    Attributes:
        value : The bipartite independence number.
        witness_st : The (s, t) with s + t = value + 1, s <= t and s smallest, that has no hole.
        lower_bound_holes : One hole for every (s, t) with s + t = value, ordered by s.

    """

    value: int
    witness_st: tuple[int, int]
    lower_bound_holes: tuple[BipartiteHole, ...] = ()

    @property
    def details(self) -> dict[str, object]:
        s, t = self.witness_st
        return {
            "value": self.value,
            "witness": {"s": s, "t": t},
            "holes": [hole.details for hole in self.lower_bound_holes],
        }


def st_property_holds(g: Graph, s: int, t: int) -> PropertyCheck:
    """Whether every disjoint A, B with |A| = s, |B| = t has a crossing edge.

    Vacuously true when s + t > n.  Otherwise the s-subsets A are tried in
    lexicographic order, and the first A whose non-neighbourhood outside A
    still has t vertices yields the hole (A, lowest t of them).
    """
    if s < 1 or t < 1:
        raise PreconditionError(f"hole sides must be positive, got s={s}, t={t}")
    if s + t > g.n:
        return PropertyCheck(s, t, True)
    everything = g.all_mask
    for members in itertools.combinations(range(g.n), s):
        a = 0
        for v in members:
            a |= 1 << v
        free = everything & ~(a | g.neighbourhood(a))
        if free.bit_count() >= t:
            hole = BipartiteHole(VertexSet(a), VertexSet(_lowest_bits(free, t)))
            return PropertyCheck(s, t, False, hole)
    return PropertyCheck(s, t, True)


def _level_holes(failures: dict[int, BipartiteHole], total: int) -> tuple[BipartiteHole, ...]:
    """Holes for every split of ``total``, mirroring the s <= t ones."""
    holes = []
    for s in range(1, total):
        t = total - s
        holes.append(failures[s] if s <= t else failures[t].swapped())
    return tuple(holes)


def alpha_tilde(g: Graph) -> AlphaTildeResult:
    previous: dict[int, BipartiteHole] = {}
    for q in range(1, g.n + 1):
        failures: dict[int, BipartiteHole] = {}
        for s in range(1, (q + 1) // 2 + 1):
            check = st_property_holds(g, s, q + 1 - s)
            if check:
                _log.debug("alpha~ = %d with (s, t) = (%d, %d)", q, check.s, check.t)
                return AlphaTildeResult(q, (check.s, check.t), _level_holes(previous, q))
            failures[s] = check.hole
        previous = failures
    # s + t = n + 1 is always vacuous
    raise FanTildeError(f"no (s, t) split succeeded on {g.n} vertices")


def alpha_tilde_upper_bound_from_min_degree(g: Graph) -> int:
    """floor(n/2), certified by (1, floor(n/2)) having no hole when 2*delta >= n."""
    if 2 * g.min_degree < g.n:
        raise PreconditionError(f"Dirac premise fails: minimum degree {g.min_degree} < {g.n}/2")
    bound = g.n // 2
    if not st_property_holds(g, 1, bound):
        raise FanTildeError(f"(1, {bound}) hole found although minimum degree is {g.min_degree}")
    return bound
