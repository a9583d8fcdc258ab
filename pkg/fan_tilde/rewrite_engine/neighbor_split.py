"""Partitions of endpoint neighbourhoods along a path.

Two contexts are supported.  ``sec2`` splits N(v_1) and N(v_m) of a plain
path at the first index k where v_1 has s neighbours among v_2..v_k.
``sec3`` works on a Hamilton path whose pair v_k v_{k+1} is virtual, and
splits N(v_k) and N(v_{k+1}) around the thresholds r, r1 and r2 (written
r, r' and r'' in the usual notation); which case applies depends on
whether r falls before or after k.

All sets are stored as sorted tuples of 1-based path positions.
"""

from __future__ import annotations

import dataclasses

from fan_tilde.bipartite_hole.holes import alpha_tilde
from fan_tilde.errors import PreconditionError
from fan_tilde.errors import ThresholdError
from fan_tilde.graph_core.graph import VertexSet

TYPE_CHECKING = False
if TYPE_CHECKING:
    from fan_tilde.graph_core.graph import Graph
    from fan_tilde.ham_solver.paths import OrientedPath

SEC2 = "sec2"
SEC3 = "sec3"
SEC3_CASE1 = "sec3_case1"
SEC3_CASE2 = "sec3_case2"
MODES = (SEC2, SEC3, SEC3_CASE1, SEC3_CASE2)

SEC2_SETS = ("S1", "S2", "T1", "T2")
CASE1_SETS = ("S1", "T1", "R1", "S2", "U2", "T2")
CASE2_SETS = ("S1", "S3", "U3", "T3", "R3", "T4", "R4", "S4", "U4")


@dataclasses.dataclass(frozen=True)
class NeighborSplit:
    """Neighbour sets of a path, keyed by name.

    Attributes:
        mode : SEC2, SEC3_CASE1 or SEC3_CASE2.
        path : The path the positions refer to.
        s, t : The hole sizes used, s <= t.
        anchors : Threshold indices (k, and for sec3 also r, r1, r2).
        positions : Set name -> sorted 1-based positions.

    """

    mode: str
    path: OrientedPath
    s: int
    t: int
    anchors: dict[str, int]
    positions: dict[str, tuple[int, ...]]

    def vertex_set(self, name: str) -> VertexSet:
        return VertexSet.from_iterable(self.path.v(i) for i in self.positions[name])

    @property
    def sets(self) -> dict[str, VertexSet]:
        return {name: self.vertex_set(name) for name in self.positions}

    def size(self, name: str) -> int:
        return len(self.positions[name])

    @property
    def details(self) -> dict[str, object]:
        return {
            "mode": self.mode,
            "s": self.s,
            "t": self.t,
            "anchors": dict(self.anchors),
            "sets": {name: self.vertex_set(name).details for name in self.positions},
            "positions": {name: list(pos) for name, pos in self.positions.items()},
        }


def _normalise_mode(mode: str) -> str:
    normalised = mode.strip().lower().replace("-", "_")
    if normalised not in MODES:
        raise PreconditionError(f"unknown split mode {mode!r}, expected one of {', '.join(MODES)}")
    return normalised


def _neighbour_positions(g: Graph, p: OrientedPath, centre: int, lo: int, hi: int) -> tuple[int, ...]:
    """Positions i in lo..hi whose vertex is adjacent to the vertex at ``centre``."""
    row = g.adj[p.v(centre)]
    return tuple(i for i in range(max(lo, 1), min(hi, p.m) + 1) if row >> p.v(i) & 1)


def _resolve_st(g: Graph, st: tuple[int, int] | None) -> tuple[int, int]:
    if st is None:
        return alpha_tilde(g).witness_st
    s, t = st
    if not 1 <= s <= t:
        raise PreconditionError(f"split sizes need 1 <= s <= t, got ({s}, {t})")
    return s, t


def _sec2(g: Graph, p: OrientedPath, s: int, t: int) -> NeighborSplit:
    if p.virtual is not None:
        raise PreconditionError("sec2 splits need a path without a virtual edge")
    m = p.m
    first = g.adj[p.v(1)]
    count = 0
    k = None
    for i in range(2, m):
        count += first >> p.v(i) & 1
        if count == s:
            k = i
            break
    if k is None:
        raise ThresholdError(f"v_1 has fewer than {s} neighbours among v_2..v_(m-1)", threshold="k")
    positions = {
        "S1": _neighbour_positions(g, p, 1, 2, k),
        "S2": _neighbour_positions(g, p, 1, k + 1, m - 1),
        "T1": _neighbour_positions(g, p, m, k, m - 1),
        "T2": _neighbour_positions(g, p, m, 2, k - 1),
    }
    return NeighborSplit(SEC2, p, s, t, {"k": k}, positions)


def _sec3(g: Graph, p: OrientedPath, s: int, t: int, mode: str) -> NeighborSplit:
    if p.virtual is None:
        raise PreconditionError("sec3 splits need a path with a virtual edge")
    if not p.is_spanning:
        raise PreconditionError("sec3 splits need a Hamilton path")
    n = p.m
    k = p.virtual
    row_k = g.adj[p.v(k)]
    count = 0
    r = None
    for i in range(1, n + 1):
        count += row_k >> p.v(i) & 1
        if count == s:
            r = i
            break
    if r is None:
        raise ThresholdError(f"v_k has fewer than {s} neighbours", threshold="r")

    case = SEC3_CASE1 if r <= k - 1 else SEC3_CASE2
    if mode != SEC3 and mode != case:
        raise PreconditionError(f"r = {r} with k = {k} gives {case}, not {mode}")

    anchors = {"k": k, "r": r}
    if case == SEC3_CASE1:
        positions = {
            "S1": _neighbour_positions(g, p, k, 1, r),
            "T1": _neighbour_positions(g, p, k + 1, r + 1, k - 1),
            "R1": _neighbour_positions(g, p, k + 1, k + 2, n),
            "S2": _neighbour_positions(g, p, k, r + 1, k - 1),
            "U2": _neighbour_positions(g, p, k, k + 2, n),
            "T2": _neighbour_positions(g, p, k + 1, 2, r),
        }
        return NeighborSplit(case, p, s, t, anchors, positions)

    tail_k = _neighbour_positions(g, p, k, r, n)
    if len(tail_k) < s + 1:
        raise ThresholdError(f"v_k has {len(tail_k)} neighbours from v_r on, needs {s + 1}", threshold="r1")
    # Largest r1 with s + 1 neighbours of v_k in v_r1..v_n.
    r1 = tail_k[-(s + 1)]
    anchors["r1"] = r1
    positions = {
        "S1": _neighbour_positions(g, p, k, 1, r),
        "S3": tail_k,
        "U3": _neighbour_positions(g, p, k, r1, n - 1),
        "T3": _neighbour_positions(g, p, k + 1, k + 2, r1 - 1),
        "R3": _neighbour_positions(g, p, k + 1, 1, k - 1),
        "T4": _neighbour_positions(g, p, k + 1, r1, n),
    }
    if len(positions["T4"]) >= s:
        r2 = positions["T4"][-s]
        anchors["r2"] = r2
        positions["R4"] = _neighbour_positions(g, p, k + 1, r2, n)
    positions["S4"] = _neighbour_positions(g, p, k, 1, k - 1)
    positions["U4"] = _neighbour_positions(g, p, k, k + 2, r1)
    return NeighborSplit(case, p, s, t, anchors, positions)


def compute_neighbor_split(
    g: Graph, p: OrientedPath, mode: str, *, st: tuple[int, int] | None = None
) -> NeighborSplit:
    """Split the endpoint (sec2) or virtual-edge (sec3) neighbourhoods of ``p``.

    ``st`` defaults to the (s, t) witness of the bipartite independence number.
    ``sec3`` picks case 1 or case 2 from r; the explicit case modes insist on one.
    Raises ThresholdError when k, r or r1 does not exist.
    """
    mode = _normalise_mode(mode)
    if p.host != g:
        raise PreconditionError("path belongs to another graph")
    s, t = _resolve_st(g, st)
    if mode == SEC2:
        return _sec2(g, p, s, t)
    return _sec3(g, p, s, t, mode)
