"""Path and cycle rewrite rules.

Every rule is described by the same three pieces: which witness indices
are admissible, which vertex pairs must be edges of the graph, and how
the output is assembled from path segments.  Indices are 1-based path
positions; ``seg(a, b)`` is v_a..v_b inclusive, walking backwards when
a > b.

  RT-A (l)        v_1 v_l                          seg(l-1, 1) + seg(l, m)
  RT-B (j, j')    v_1 v_{j+1}, v_j v_j'            seg(j'-1, j+1) + seg(1, j) + seg(j', m)
  RC-0 (i, j)     v_1 v_i, v_j v_m, v_{i-1} v_{j+1}   cycle seg(i, j) + seg(m, j+1) + seg(i-1, 1)
  RC-1 (j)        v_j v_m, v_1 v_{j+1}             cycle seg(1, j) + seg(m, j+1)
  RC-2 (j', j'')  v_1 v_j', v_j'' v_m, v_{j'+1} v_{j''+1}
                                                   cycle seg(1, j'') + seg(m, j'+1) + seg(j''+1, j')
  CTL (i, w)      w off the cycle, w c_i           path w, c_i, c_{i+1}, ..., c_{i-1}

HP-1..HP-8 take (j, j') on a Hamilton path whose pair at positions k, k+1
is virtual, and return a Hamilton path with the same ends using only real
edges.  EXT (w) appends a vertex, CLOSE () turns a path whose ends are
adjacent into a cycle.

A rule with ``reverse`` set is applied to the reversed path.  Outputs of
HP and EXT are reversed back so the ends keep their orientation.
"""

from __future__ import annotations

import dataclasses
import itertools

from fan_tilde.errors import PathError
from fan_tilde.errors import RewriteError
from fan_tilde.ham_solver.paths import Cycle
from fan_tilde.ham_solver.paths import OrientedPath

TYPE_CHECKING = False
if TYPE_CHECKING:
    from collections.abc import Callable, Iterator, Mapping

    from fan_tilde.graph_core.graph import Graph

RT_A = "RT-A"
RT_B = "RT-B"
RC_0 = "RC-0"
RC_1 = "RC-1"
RC_2 = "RC-2"
CTL = "CTL"
HP_1 = "HP-1"
HP_2 = "HP-2"
HP_3 = "HP-3"
HP_4 = "HP-4"
HP_5 = "HP-5"
HP_6 = "HP-6"
HP_7 = "HP-7"
HP_8 = "HP-8"
EXT = "EXT"
CLOSE = "CLOSE"

ROTATIONS = (RT_A, RT_B)
CROSSINGS = (RC_0, RC_1, RC_2)
HP_RULES = (HP_1, HP_2, HP_3, HP_4, HP_5, HP_6, HP_7, HP_8)
CASE1_RULES = (HP_1, HP_2, HP_3, HP_4)
CASE2_RULES = (HP_5, HP_6, HP_7, HP_8)

# Input shapes
ON_PATH = "path"
ON_VIRTUAL_PATH = "virtual-path"
ON_CYCLE = "cycle"


@dataclasses.dataclass(frozen=True)
class RewriteRule:
    """A rule id with the witness indices it consumes."""

    rule_id: str
    witness: tuple[int, ...] = ()
    reverse: bool = False

    @property
    def details(self) -> dict[str, object]:
        return {"rule": self.rule_id, "witness": list(self.witness), "reverse": self.reverse}

    def __str__(self):
        arrow = "~" if self.reverse else ""
        return f"{arrow}{self.rule_id}{self.witness}"


@dataclasses.dataclass(frozen=True)
class _RuleShape:
    arity: int
    accepts: str
    produces: str
    indices_ok: Callable[..., bool]
    edges: Callable[..., tuple[tuple[int, int], ...]]
    build: Callable[..., tuple[int, ...]]
    keeps_orientation: bool = False


def _seg(p: OrientedPath, a: int, b: int) -> tuple[int, ...]:
    return p.seg(a, b)


def _hp(indices_ok, edges, build) -> _RuleShape:
    return _RuleShape(2, ON_VIRTUAL_PATH, ON_PATH, indices_ok, edges, build, keeps_orientation=True)


# Index checks receive (m, k, *witness); k is the virtual position or None.
RULES: dict[str, _RuleShape] = {
    RT_A: _RuleShape(
        1, ON_PATH, ON_PATH,
        lambda m, k, ell: 3 <= ell <= m,
        lambda p, ell: ((1, ell),),
        lambda p, ell: _seg(p, ell - 1, 1) + _seg(p, ell, p.m),
    ),
    RT_B: _RuleShape(
        2, ON_PATH, ON_PATH,
        lambda m, k, j, j2: 2 <= j and j + 2 <= j2 <= m,
        lambda p, j, j2: ((1, j + 1), (j, j2)),
        lambda p, j, j2: _seg(p, j2 - 1, j + 1) + _seg(p, 1, j) + _seg(p, j2, p.m),
    ),
    RC_0: _RuleShape(
        2, ON_PATH, ON_CYCLE,
        lambda m, k, i, j: 2 <= i <= j <= m - 1,
        lambda p, i, j: ((1, i), (j, p.m), (i - 1, j + 1)),
        lambda p, i, j: _seg(p, i, j) + _seg(p, p.m, j + 1) + _seg(p, i - 1, 1),
    ),
    RC_1: _RuleShape(
        1, ON_PATH, ON_CYCLE,
        lambda m, k, j: 1 <= j <= m - 2,
        lambda p, j: ((j, p.m), (1, j + 1)),
        lambda p, j: _seg(p, 1, j) + _seg(p, p.m, j + 1),
    ),
    RC_2: _RuleShape(
        2, ON_PATH, ON_CYCLE,
        lambda m, k, j1, j2: 1 <= j2 < j1 <= m - 1,
        lambda p, j1, j2: ((1, j1), (j2, p.m), (j1 + 1, j2 + 1)),
        lambda p, j1, j2: _seg(p, 1, j2) + _seg(p, p.m, j1 + 1) + _seg(p, j2 + 1, j1),
    ),
    CLOSE: _RuleShape(
        0, ON_PATH, ON_CYCLE,
        lambda m, k: m >= 3,
        lambda p: ((1, p.m),),
        lambda p: p.verts,
    ),
    HP_1: _hp(
        lambda n, k, j, j2: 1 <= j < j2 <= k - 1,
        lambda p, j, j2: ((j, p.virtual), (j2, p.virtual + 1), (j + 1, j2 + 1)),
        lambda p, j, j2: (_seg(p, 1, j) + _seg(p, p.virtual, j2 + 1) + _seg(p, j + 1, j2)
                          + _seg(p, p.virtual + 1, p.m)),
    ),
    HP_2: _hp(
        lambda n, k, j, j2: 1 <= j <= k - 1 and k + 2 <= j2 <= n,
        lambda p, j, j2: ((j, p.virtual), (j2, p.virtual + 1), (j + 1, j2 - 1)),
        lambda p, j, j2: (_seg(p, 1, j) + _seg(p, p.virtual, j + 1) + _seg(p, j2 - 1, p.virtual + 1)
                          + _seg(p, j2, p.m)),
    ),
    HP_3: _hp(
        lambda n, k, j, j2: 2 <= j2 < j <= k - 1,
        lambda p, j, j2: ((j, p.virtual), (j2, p.virtual + 1), (j + 1, j2 - 1)),
        lambda p, j, j2: (_seg(p, 1, j2 - 1) + _seg(p, j + 1, p.virtual) + _seg(p, j, j2)
                          + _seg(p, p.virtual + 1, p.m)),
    ),
    HP_4: _hp(
        lambda n, k, j, j2: 2 <= j2 <= k - 1 and k + 2 <= j <= n,
        lambda p, j, j2: ((j, p.virtual), (j2, p.virtual + 1), (j - 1, j2 - 1)),
        lambda p, j, j2: (_seg(p, 1, j2 - 1) + _seg(p, j - 1, p.virtual + 1) + _seg(p, j2, p.virtual)
                          + _seg(p, j, p.m)),
    ),
    HP_5: _hp(
        lambda n, k, j, j2: k + 2 <= j2 < j <= n - 1,
        lambda p, j, j2: ((j, p.virtual), (j2, p.virtual + 1), (j + 1, j2 - 1)),
        lambda p, j, j2: (_seg(p, 1, p.virtual) + _seg(p, j, j2) + _seg(p, p.virtual + 1, j2 - 1)
                          + _seg(p, j + 1, p.m)),
    ),
    HP_6: _hp(
        lambda n, k, j, j2: 1 <= j2 <= k - 1 and k + 2 <= j <= n - 1,
        lambda p, j, j2: ((j, p.virtual), (j2, p.virtual + 1), (j + 1, j2 + 1)),
        lambda p, j, j2: (_seg(p, 1, j2) + _seg(p, p.virtual + 1, j) + _seg(p, p.virtual, j2 + 1)
                          + _seg(p, j + 1, p.m)),
    ),
    HP_7: _hp(
        lambda n, k, j, j2: 1 <= j2 <= k - 1 and k + 2 <= j <= n,
        lambda p, j, j2: ((j, p.virtual + 1), (j2, p.virtual), (j - 1, j2 + 1)),
        lambda p, j, j2: (_seg(p, 1, j2) + _seg(p, p.virtual, j2 + 1) + _seg(p, j - 1, p.virtual + 1)
                          + _seg(p, j, p.m)),
    ),
    HP_8: _hp(
        lambda n, k, j, j2: k + 2 <= j2 < j <= n,
        lambda p, j, j2: ((j, p.virtual + 1), (j2, p.virtual), (j - 1, j2 - 1)),
        lambda p, j, j2: (_seg(p, 1, p.virtual) + _seg(p, j2, j - 1) + _seg(p, j2 - 1, p.virtual + 1)
                          + _seg(p, j, p.m)),
    ),
}


def _reject(rule: RewriteRule, check: str, error: str) -> RewriteError:
    return RewriteError(error, rule=rule.rule_id, check=check)


def _apply_ctl(g: Graph, cycle: Cycle, rule: RewriteRule) -> OrientedPath:
    if len(rule.witness) != 2:
        raise _reject(rule, "arity", f"CTL takes (i, w), got {rule.witness}")
    i, w = rule.witness
    if not 1 <= i <= cycle.m:
        raise _reject(rule, "index-range", f"cycle position {i} outside 1..{cycle.m}")
    if not 0 <= w < g.n or cycle.mask >> w & 1:
        raise _reject(rule, "off-cycle", f"vertex {w} is not off the cycle")
    c_i = cycle.verts[i - 1]
    if not g.adj[w] >> c_i & 1:
        raise _reject(rule, "edge w c_i", f"{w} is not adjacent to {c_i}")
    verts = (w,) + cycle.verts[i - 1:] + cycle.verts[:i - 1]
    try:
        return OrientedPath(g, verts)
    except PathError as exc:
        raise _reject(rule, exc.check, str(exc)) from None


def _apply_ext(g: Graph, p: OrientedPath, rule: RewriteRule) -> OrientedPath:
    if len(rule.witness) != 1:
        raise _reject(rule, "arity", f"EXT takes (w,), got {rule.witness}")
    (w,) = rule.witness
    if not 0 <= w < g.n or w in p:
        raise _reject(rule, "off-path", f"vertex {w} is not off the path")
    if not g.adj[p.last] >> w & 1:
        raise _reject(rule, "edge v_m w", f"{p.last} is not adjacent to {w}")
    return OrientedPath(g, p.verts + (w,))


def apply_rewrite(g: Graph, p: OrientedPath | Cycle, rule: RewriteRule) -> OrientedPath | Cycle:
    """Apply ``rule`` to ``p`` and return the validated result.

    Raises RewriteError naming the failed check; nothing invalid is ever
    returned.
    """
    if p.host != g:
        raise _reject(rule, "host", "path belongs to another graph")
    if rule.rule_id == CTL:
        if not isinstance(p, Cycle):
            raise _reject(rule, "input-shape", "CTL needs a cycle")
        if rule.reverse:
            raise _reject(rule, "input-shape", "CTL has no reversed form")
        return _apply_ctl(g, p, rule)
    if not isinstance(p, OrientedPath):
        raise _reject(rule, "input-shape", f"{rule.rule_id} needs a path")
    target = p.reversed() if rule.reverse else p
    if rule.rule_id == EXT:
        out = _apply_ext(g, target, rule)
        return out.reversed() if rule.reverse else out

    shape = RULES.get(rule.rule_id)
    if shape is None:
        raise _reject(rule, "rule-id", f"unknown rule {rule.rule_id!r}")
    if shape.accepts == ON_VIRTUAL_PATH and target.virtual is None:
        raise _reject(rule, "virtual-edge", "path has no virtual edge to remove")
    if shape.accepts == ON_PATH and target.virtual is not None:
        raise _reject(rule, "virtual-edge", "path carries a virtual edge")
    if len(rule.witness) != shape.arity:
        raise _reject(rule, "arity", f"expected {shape.arity} witness indices, got {len(rule.witness)}")
    if not shape.indices_ok(target.m, target.virtual, *rule.witness):
        raise _reject(rule, "index-range", f"witness {rule.witness} outside the admissible range")
    for a, b in shape.edges(target, *rule.witness):
        if not g.adj[target.v(a)] >> target.v(b) & 1:
            raise _reject(rule, f"edge v{a} v{b}", f"{target.v(a)}-{target.v(b)} is not an edge")

    verts = shape.build(target, *rule.witness)
    if len(verts) != target.m or set(verts) != set(target.verts):
        raise _reject(rule, "vertex-set", f"output {verts} does not cover the input vertices")
    try:
        out = Cycle(g, verts) if shape.produces == ON_CYCLE else OrientedPath(g, verts)
    except PathError as exc:
        raise _reject(rule, exc.check, str(exc)) from None
    if shape.keeps_orientation:
        if (out.verts[0], out.verts[-1]) != (target.first, target.last):
            raise _reject(rule, "endpoints", f"output ends {out.verts[0]}, {out.verts[-1]} moved")
        if rule.reverse:
            return out.reversed()
    return out


def iter_witnesses(
    p: OrientedPath,
    rule_id: str,
    *,
    reverse: bool = False,
    allowed: Mapping[int, frozenset[int] | set[int] | tuple[int, ...]] | None = None,
) -> Iterator[RewriteRule]:
    """Every witness of ``rule_id`` on ``p`` in lexicographic order.

    ``allowed`` optionally restricts witness slot i to the given positions.
    Only index ranges and required edges are checked here.
    """
    shape = RULES[rule_id]
    target = p.reversed() if reverse else p
    if (shape.accepts == ON_VIRTUAL_PATH) != (target.virtual is not None):
        return
    g = target.host
    positions = range(1, target.m + 1)
    for witness in itertools.product(positions, repeat=shape.arity):
        if allowed and any(slot in allowed and witness[slot] not in allowed[slot] for slot in range(shape.arity)):
            continue
        if not shape.indices_ok(target.m, target.virtual, *witness):
            continue
        if all(g.adj[target.v(a)] >> target.v(b) & 1 for a, b in shape.edges(target, *witness)):
            yield RewriteRule(rule_id, witness, reverse)


def first_witness(p: OrientedPath, rule_ids: tuple[str, ...], *, reverse: bool = False) -> RewriteRule | None:
    """The first witness in (rule id, witness) order, or None."""
    for rule_id in rule_ids:
        for rule in iter_witnesses(p, rule_id, reverse=reverse):
            return rule
    return None


def ctl_witness(cycle: Cycle) -> RewriteRule | None:
    """Smallest (i, w) with w off the cycle and adjacent to c_i."""
    g = cycle.host
    for i, c in enumerate(cycle.verts, start=1):
        outside = g.adj[c] & ~cycle.mask
        if outside:
            return RewriteRule(CTL, (i, (outside & -outside).bit_length() - 1))
    return None


def rotation_endpoint(p: OrientedPath, rule: RewriteRule) -> int:
    """The new first vertex an RT rule would produce, without applying it."""
    target = p.reversed() if rule.reverse else p
    if rule.rule_id == RT_A:
        return target.v(rule.witness[0] - 1)
    if rule.rule_id == RT_B:
        return target.v(rule.witness[1] - 1)
    raise _reject(rule, "rule-id", "not a rotation")
