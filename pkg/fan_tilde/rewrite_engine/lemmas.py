"""Executable versions of the counting facts behind the rewrite rules.

Each check states something that follows from the (s, t) pair of a split
having no bipartite hole: if a set grows past its bound, some crossing
edge exists, and every crossing edge is the witness of a rewrite rule.
The functions return the list of statements that failed, so an empty
list means the context behaves as the proof requires.
"""

from __future__ import annotations

from fan_tilde.errors import PreconditionError
from fan_tilde.errors import RewriteError
from fan_tilde.rewrite_engine.neighbor_split import SEC2
from fan_tilde.rewrite_engine.neighbor_split import SEC3_CASE1
from fan_tilde.rewrite_engine.neighbor_split import SEC3_CASE2
from fan_tilde.rewrite_engine.rules import HP_1
from fan_tilde.rewrite_engine.rules import HP_2
from fan_tilde.rewrite_engine.rules import HP_3
from fan_tilde.rewrite_engine.rules import HP_4
from fan_tilde.rewrite_engine.rules import HP_5
from fan_tilde.rewrite_engine.rules import HP_6
from fan_tilde.rewrite_engine.rules import HP_7
from fan_tilde.rewrite_engine.rules import HP_8
from fan_tilde.rewrite_engine.rules import RC_0
from fan_tilde.rewrite_engine.rules import RC_1
from fan_tilde.rewrite_engine.rules import RC_2
from fan_tilde.rewrite_engine.rules import apply_rewrite
from fan_tilde.rewrite_engine.rules import iter_witnesses

TYPE_CHECKING = False
if TYPE_CHECKING:
    from fan_tilde.graph_core.graph import Graph
    from fan_tilde.rewrite_engine.neighbor_split import NeighborSplit
    from fan_tilde.rewrite_engine.rules import RewriteRule


def _witnesses(split: NeighborSplit, rule_id: str, first: str | None, second: str | None) -> list[RewriteRule]:
    allowed = {}
    if first is not None:
        allowed[0] = frozenset(split.positions[first])
    if second is not None:
        allowed[1] = frozenset(split.positions[second])
    return list(iter_witnesses(split.path, rule_id, allowed=allowed))


def _all_apply(g: Graph, split: NeighborSplit, rules: list[RewriteRule], problems: list[str]) -> None:
    for rule in rules:
        try:
            apply_rewrite(g, split.path, rule)
        except RewriteError as exc:
            problems.append(f"witness {rule} did not rewrite: {exc}")


def _degree_on_path(g: Graph, split: NeighborSplit, position: int) -> int:
    return g.degree(split.path.v(position))


def check_rotation_lemmas(g: Graph, split: NeighborSplit) -> list[str]:
    """Facts about the endpoint split of a path (mode ``sec2``)."""
    if split.mode != SEC2:
        raise PreconditionError(f"expected a {SEC2} split, got {split.mode}")
    p = split.path
    m = p.m
    s, t = split.s, split.t
    problems = []

    rc0 = _witnesses(split, RC_0, "S1", "T1")
    rc1 = _witnesses(split, RC_1, "T2", None)
    rc2 = _witnesses(split, RC_2, "S2", "T2")
    _all_apply(g, split, rc0 + rc1 + rc2, problems)

    # Every edge from S1- to T1+ is an RC-0 witness.
    for i in split.positions["S1"]:
        for j in split.positions["T1"]:
            if i <= j and g.adj[p.v(i - 1)] >> p.v(j + 1) & 1 and (i, j) not in {r.witness for r in rc0}:
                problems.append(f"edge v{i - 1} v{j + 1} crosses S1- and T1+ but no RC-0 witness ({i}, {j})")

    if split.size("S1") != s:
        problems.append(f"|S1| = {split.size('S1')}, expected s = {s}")
    if not rc0 and split.size("T1") > t - 1:
        problems.append(f"no RC-0 witness yet |T1| = {split.size('T1')} > t - 1 = {t - 1}")

    inner = {p.v(i) for i in range(2, m)}
    last_nbrs = set(g.neighbours(p.last))
    if last_nbrs <= inner and split.size("T2") != len(last_nbrs) - split.size("T1"):
        problems.append(f"|T2| = {split.size('T2')} differs from d(v_m) - |T1|")
    first_nbrs = set(g.neighbours(p.first))
    if first_nbrs <= inner and split.sets["S1"] | split.sets["S2"] != g.neighbours(p.first):
        problems.append("N(v_1) is not S1 | S2")

    if not rc1 and not rc2 and split.size("T2") >= s and split.size("S2") > t - 2:
        problems.append(f"no RC-1/RC-2 witness, |T2| >= s, yet |S2| = {split.size('S2')} > t - 2 = {t - 2}")
    return problems


def _case1(g: Graph, split: NeighborSplit, problems: list[str]) -> None:
    p = split.path
    s, t = split.s, split.t
    k = split.anchors["k"]
    hp12 = _witnesses(split, HP_1, "S1", "T1") + _witnesses(split, HP_2, "S1", "R1")
    hp34 = _witnesses(split, HP_3, "S2", "T2") + _witnesses(split, HP_4, "U2", "T2")
    _all_apply(g, split, hp12 + hp34, problems)

    t1r1 = split.size("T1") + split.size("R1")
    if not hp12 and t1r1 > t - 1:
        problems.append(f"no HP-1/HP-2 witness yet |T1 | R1| = {t1r1} > t - 1 = {t - 1}")
    s2u2 = split.size("S2") + split.size("U2")
    if not hp34 and split.size("T2") >= s and s2u2 > t - 1:
        problems.append(f"no HP-3/HP-4 witness, |T2| >= s, yet |S2 | U2| = {s2u2} > t - 1 = {t - 1}")

    d_k = _degree_on_path(g, split, k)
    if d_k != split.size("S1") + s2u2:
        problems.append(f"d(v_k) = {d_k} differs from |S1| + |S2| + |U2| = {split.size('S1') + s2u2}")
    first_bonus = g.adj[p.v(k + 1)] >> p.v(1) & 1
    d_k1 = _degree_on_path(g, split, k + 1)
    if d_k1 != t1r1 + split.size("T2") + first_bonus:
        problems.append(f"d(v_(k+1)) = {d_k1} differs from |T1| + |R1| + |T2| (+1 for v_1)")


def _case2(g: Graph, split: NeighborSplit, problems: list[str]) -> None:
    s, t = split.s, split.t
    k = split.anchors["k"]
    d_k = _degree_on_path(g, split, k)
    d_k1 = _degree_on_path(g, split, k + 1)

    if split.size("S3") != d_k - split.size("S1") + 1:
        problems.append(f"|S3| = {split.size('S3')} differs from d(v_k) - |S1| + 1 = {d_k - split.size('S1') + 1}")

    hp56 = _witnesses(split, HP_5, "U3", "T3") + _witnesses(split, HP_6, "U3", "R3")
    _all_apply(g, split, hp56, problems)
    t3r3 = split.size("T3") + split.size("R3")
    if not hp56 and t3r3 > t - 1:
        problems.append(f"no HP-5/HP-6 witness yet |T3 | R3| = {t3r3} > t - 1 = {t - 1}")
    if split.size("T4") != d_k1 - t3r3:
        problems.append(f"|T4| = {split.size('T4')} differs from d(v_(k+1)) - |T3| - |R3| = {d_k1 - t3r3}")

    s4u4 = split.size("S4") + split.size("U4")
    if d_k != s4u4 + s:
        problems.append(f"d(v_k) = {d_k} differs from |S4| + |U4| + s = {s4u4 + s}")
    if "R4" not in split.positions:
        return
    hp78 = _witnesses(split, HP_7, "R4", "S4") + _witnesses(split, HP_8, "R4", "U4")
    _all_apply(g, split, hp78, problems)
    if split.anchors["r2"] > split.anchors["r1"] and not hp78 and s4u4 > t - 1:
        problems.append(f"no HP-7/HP-8 witness yet |S4 | U4| = {s4u4} > t - 1 = {t - 1}")


def check_crossing_lemmas(g: Graph, split: NeighborSplit) -> list[str]:
    """Facts about the virtual-edge split of a Hamilton path (modes ``sec3_case*``)."""
    problems: list[str] = []
    if split.mode == SEC3_CASE1:
        _case1(g, split, problems)
    elif split.mode == SEC3_CASE2:
        _case2(g, split, problems)
    else:
        raise PreconditionError(f"expected a sec3 split, got {split.mode}")
    return problems


def check_split_lemmas(g: Graph, split: NeighborSplit) -> list[str]:
    if split.mode == SEC2:
        return check_rotation_lemmas(g, split)
    return check_crossing_lemmas(g, split)
