"""Constructive drivers that turn the rewrite rules into certificates.

``construct_hamilton_cycle`` grows a path from vertex 0, closes it with
CLOSE or a crossing rule, absorbs leftover vertices with CTL and, when it
gets stuck, rotates the path breadth-first over new endpoint pairs.
``construct_hamilton_path`` solves G + e for a well-chosen non-edge e and
removes e again with one HP rule.

Both drivers are best-effort: once the application budget is spent, or no
rule fits, the exact solver takes over and the trace is marked as a
fallback.  Every returned certificate has been re-validated against G.
"""

from __future__ import annotations

import collections
import dataclasses
import logging

from fan_tilde.bipartite_hole.holes import alpha_tilde
from fan_tilde.conditions.predicates import theorem_ham_hypothesis
from fan_tilde.conditions.predicates import theorem_hc_hypothesis
from fan_tilde.conditions.predicates import v_star
from fan_tilde.errors import FanTildeError
from fan_tilde.errors import PathError
from fan_tilde.errors import PreconditionError
from fan_tilde.errors import ThresholdError
from fan_tilde.ham_solver.paths import CYCLE
from fan_tilde.ham_solver.paths import PATH
from fan_tilde.ham_solver.paths import Cycle
from fan_tilde.ham_solver.paths import HamCertificate
from fan_tilde.ham_solver.paths import OrientedPath
from fan_tilde.ham_solver.solver import hamilton_cycle
from fan_tilde.ham_solver.solver import hamilton_path_between
from fan_tilde.ham_solver.solver import longest_path_from
from fan_tilde.rewrite_engine.neighbor_split import SEC3
from fan_tilde.rewrite_engine.neighbor_split import compute_neighbor_split
from fan_tilde.rewrite_engine.rules import CLOSE
from fan_tilde.rewrite_engine.rules import CROSSINGS
from fan_tilde.rewrite_engine.rules import EXT
from fan_tilde.rewrite_engine.rules import HP_1
from fan_tilde.rewrite_engine.rules import HP_2
from fan_tilde.rewrite_engine.rules import HP_3
from fan_tilde.rewrite_engine.rules import HP_4
from fan_tilde.rewrite_engine.rules import HP_5
from fan_tilde.rewrite_engine.rules import HP_6
from fan_tilde.rewrite_engine.rules import HP_7
from fan_tilde.rewrite_engine.rules import HP_8
from fan_tilde.rewrite_engine.rules import HP_RULES
from fan_tilde.rewrite_engine.rules import ROTATIONS
from fan_tilde.rewrite_engine.rules import RewriteRule
from fan_tilde.rewrite_engine.rules import apply_rewrite
from fan_tilde.rewrite_engine.rules import ctl_witness
from fan_tilde.rewrite_engine.rules import first_witness
from fan_tilde.rewrite_engine.rules import iter_witnesses
from fan_tilde.rewrite_engine.rules import rotation_endpoint

TYPE_CHECKING = False
if TYPE_CHECKING:
    from fan_tilde.graph_core.graph import Graph

_log = logging.getLogger(__name__)

FALLBACK = "FALLBACK"

# Split sets each HP witness slot is drawn from
HP_SLOTS = {
    HP_1: ("S1", "T1"),
    HP_2: ("S1", "R1"),
    HP_3: ("S2", "T2"),
    HP_4: ("U2", "T2"),
    HP_5: ("U3", "T3"),
    HP_6: ("U3", "R3"),
    HP_7: ("R4", "S4"),
    HP_8: ("R4", "U4"),
}


@dataclasses.dataclass(frozen=True)
class TraceStep:
    """One applied rule and the sequence it produced."""

    rule: RewriteRule
    result: tuple[int, ...]
    kind: str

    @property
    def details(self) -> dict[str, object]:
        return {**self.rule.details, "result": list(self.result), "kind": self.kind}


@dataclasses.dataclass(frozen=True)
class Trace:
    """Everything needed to replay a construction.

    Attributes:
        initial : Vertex sequence of the starting path.
        initial_virtual : Virtual position of the starting path, if any.
        auxiliary_edge : The non-edge added to G while searching, if any.
        steps : Applied rules in order.
        fallback : True when the exact solver produced the certificate.

    """

    initial: tuple[int, ...]
    initial_virtual: int | None = None
    auxiliary_edge: tuple[int, int] | None = None
    steps: tuple[TraceStep, ...] = ()
    fallback: bool = False

    @property
    def details(self) -> dict[str, object]:
        return {
            "initial": list(self.initial),
            "initial_virtual": self.initial_virtual,
            "auxiliary_edge": None if self.auxiliary_edge is None else list(self.auxiliary_edge),
            "steps": [step.details for step in self.steps],
            "fallback": self.fallback,
        }


@dataclasses.dataclass(frozen=True)
class Construction:
    certificate: HamCertificate
    trace: Trace

    @property
    def details(self) -> dict[str, object]:
        return {"certificate": self.certificate.details, "trace": self.trace.details}


class _BudgetSpent(Exception):
    pass


def _kind_of(shape: OrientedPath | Cycle) -> str:
    return CYCLE if isinstance(shape, Cycle) else PATH


def _smallest_outside(g: Graph, v: int, taken: int) -> int | None:
    outside = g.adj[v] & ~taken
    return (outside & -outside).bit_length() - 1 if outside else None


def find_extension(p: OrientedPath) -> RewriteRule | None:
    """EXT at the last vertex, else at the first, with the smallest new vertex."""
    g = p.host
    w = _smallest_outside(g, p.last, p.mask)
    if w is not None:
        return RewriteRule(EXT, (w,))
    w = _smallest_outside(g, p.first, p.mask)
    if w is not None:
        return RewriteRule(EXT, (w,), reverse=True)
    return None


def find_closing_witness(p: OrientedPath) -> RewriteRule | None:
    """CLOSE when the ends are adjacent, else the first crossing rule."""
    if p.m >= 3 and p.host.has_edge(p.first, p.last):
        return RewriteRule(CLOSE)
    return first_witness(p, CROSSINGS) or first_witness(p, CROSSINGS, reverse=True)


def find_rotation_witnesses(p: OrientedPath) -> list[RewriteRule]:
    """Every RT-A / RT-B witness at the first end, then at the last end."""
    return [
        rule
        for reverse in (False, True)
        for rule_id in ROTATIONS
        for rule in iter_witnesses(p, rule_id, reverse=reverse)
    ]


def find_hp_witness(g: Graph, p: OrientedPath, *, st: tuple[int, int] | None = None) -> RewriteRule | None:
    """An HP rule that removes the virtual edge of the Hamilton path ``p``.

    The path is read in the direction where d(v_k) <= d(v_(k+1)).  Witnesses
    drawn from the neighbour-split sets of the applicable case come first;
    when the split does not exist, or yields nothing, every HP rule is tried
    without restriction.
    """
    if p.virtual is None:
        raise PreconditionError("path has no virtual edge")
    k = p.virtual
    reverse = g.degree(p.v(k)) > g.degree(p.v(k + 1))
    target = p.reversed() if reverse else p
    try:
        split = compute_neighbor_split(g, target, SEC3, st=st)
    except ThresholdError as exc:
        _log.debug("no split for %s: %s", p.verts, exc)
    else:
        for rule_id, names in HP_SLOTS.items():
            if not all(name in split.positions for name in names):
                continue
            allowed = {slot: frozenset(split.positions[name]) for slot, name in enumerate(names)}
            for rule in iter_witnesses(p, rule_id, reverse=reverse, allowed=allowed):
                return rule
    return first_witness(p, HP_RULES, reverse=reverse)


def choose_virtual_edge(g: Graph, alpha: int | None = None) -> tuple[int, int] | None:
    """The non-edge inside V* whose smaller end degree is largest.

    Ties go to the lexicographically first pair; None when V* is a clique.
    """
    star = v_star(g, alpha=alpha).members
    best = None
    best_degree = -1
    for u, v in g.non_edges():
        if u in star and v in star:
            low = min(g.degree(u), g.degree(v))
            if low > best_degree:
                best, best_degree = (u, v), low
    return best


class _CycleDriver:
    def __init__(self, g: Graph, budget: int):
        self.g = g
        self.budget = budget
        self.applications = 0
        self.steps: list[TraceStep] = []

    def apply(self, shape: OrientedPath | Cycle, rule: RewriteRule) -> OrientedPath | Cycle:
        if self.applications >= self.budget:
            raise _BudgetSpent
        self.applications += 1
        return apply_rewrite(self.g, shape, rule)

    def record(self, rule: RewriteRule, out: OrientedPath | Cycle) -> None:
        _log.debug("%s -> %s", rule, out.verts)
        self.steps.append(TraceStep(rule, out.verts, _kind_of(out)))

    def step(self, shape: OrientedPath | Cycle, rule: RewriteRule) -> OrientedPath | Cycle:
        out = self.apply(shape, rule)
        self.record(rule, out)
        return out

    def grow(self, p: OrientedPath) -> OrientedPath:
        """Rebuild ``p`` from one vertex through EXT steps."""
        start = p.position(0) if 0 in p else 1
        current = OrientedPath(self.g, (p.v(start),))
        for i in range(start + 1, p.m + 1):
            current = self.step(current, RewriteRule(EXT, (p.v(i),)))
        for i in range(start - 1, 0, -1):
            current = self.step(current, RewriteRule(EXT, (p.v(i),), reverse=True))
        return current

    def rotate(self, p: OrientedPath) -> OrientedPath | None:
        """Breadth-first rotations until a path that extends or closes turns up."""
        seen = {frozenset((p.first, p.last))}
        queue = collections.deque([(p, ())])
        while queue:
            path, chain = queue.popleft()
            for rule in find_rotation_witnesses(path):
                kept = path.first if rule.reverse else path.last
                key = frozenset((rotation_endpoint(path, rule), kept))
                if key in seen:
                    continue
                seen.add(key)
                rotated = self.apply(path, rule)
                found = (*chain, (rule, rotated))
                if find_extension(rotated) or find_closing_witness(rotated):
                    for done_rule, out in found:
                        self.record(done_rule, out)
                    return rotated
                queue.append((rotated, found))
        return None

    def run(self, p: OrientedPath) -> Cycle | None:
        current: OrientedPath | Cycle = self.grow(p)
        while True:
            if isinstance(current, Cycle):
                if current.is_spanning:
                    return current
                absorb = ctl_witness(current)
                if absorb is None:
                    return None
                current = self.step(current, absorb)
                continue
            rule = find_extension(current) or find_closing_witness(current)
            if rule is not None:
                current = self.step(current, rule)
                continue
            rotated = self.rotate(current)
            if rotated is None:
                return None
            current = rotated


def construct_hamilton_cycle(g: Graph, *, budget: int | None = None) -> Construction:
    """A Hamilton cycle of g built from rewrite rules, with its trace.

    ``budget`` caps the number of rule applications (default n squared).
    Raises PreconditionError when g misses the hypothesis of the
    hamiltonicity theorem.
    """
    alpha = alpha_tilde(g).value
    if not theorem_ham_hypothesis(g, alpha=alpha):
        raise PreconditionError("graph does not satisfy the hamiltonicity hypothesis")
    driver = _CycleDriver(g, g.n * g.n if budget is None else budget)
    longest = longest_path_from(g, OrientedPath(g, (0,)))
    initial = (0,) if 0 in longest else (longest.first,)
    try:
        cycle = driver.run(longest)
    except _BudgetSpent:
        _log.info("rule budget of %d spent", driver.budget)
        cycle = None
    if cycle is not None:
        certificate = HamCertificate(CYCLE, cycle.verts)
        certificate.validate(g)
        return Construction(certificate, Trace(initial, steps=tuple(driver.steps)))

    certificate = hamilton_cycle(g)
    if certificate is None:
        raise FanTildeError("no Hamilton cycle in a graph meeting the hypothesis")
    _log.info("cycle construction fell back to the exact solver")
    steps = (*driver.steps, TraceStep(RewriteRule(FALLBACK), certificate.verts, CYCLE))
    return Construction(certificate, Trace(initial, steps=steps, fallback=True))


def _virtual_position(verts: tuple[int, ...], edge: tuple[int, int] | None) -> int | None:
    if edge is None:
        return None
    for i, pair in enumerate(zip(verts, verts[1:]), start=1):
        if set(pair) == set(edge):
            return i
    return None


def _path_fallback(g: Graph, x: int, y: int, trace: Trace) -> Construction:
    certificate = hamilton_path_between(g, x, y)
    if certificate is None:
        raise FanTildeError(f"no Hamilton path between {x} and {y} in a graph meeting the hypothesis")
    _log.info("path construction for (%d, %d) fell back to the exact solver", x, y)
    step = TraceStep(RewriteRule(FALLBACK), certificate.verts, PATH)
    return Construction(certificate, dataclasses.replace(trace, steps=(*trace.steps, step), fallback=True))


def construct_hamilton_path(g: Graph, x: int, y: int) -> Construction:
    """A Hamilton (x, y)-path of g built through one virtual edge, with its trace.

    Raises PreconditionError when x == y or g misses the hypothesis of the
    hamiltonian-connectedness theorem.
    """
    g.check_vertex(x)
    g.check_vertex(y)
    if x == y:
        raise PreconditionError(f"Hamilton path endpoints must differ, got {x} twice")
    alpha = alpha_tilde(g)
    if not theorem_hc_hypothesis(g, alpha=alpha.value):
        raise PreconditionError("graph does not satisfy the hamiltonian-connectedness hypothesis")

    edge = choose_virtual_edge(g, alpha.value)
    host = g if edge is None else g.with_edge(*edge)
    found = hamilton_path_between(host, x, y)
    if found is None:
        return _path_fallback(g, x, y, Trace((x,), auxiliary_edge=edge))
    k = _virtual_position(found.verts, edge)
    path = OrientedPath(g, found.verts, k)
    trace = Trace(path.verts, k, edge)
    if k is None:
        certificate = HamCertificate(PATH, path.verts)
        certificate.validate(g, (x, y))
        return Construction(certificate, trace)

    rule = find_hp_witness(g, path, st=alpha.witness_st)
    if rule is None:
        return _path_fallback(g, x, y, trace)
    out = apply_rewrite(g, path, rule)
    _log.debug("%s -> %s", rule, out.verts)
    certificate = HamCertificate(PATH, out.verts)
    certificate.validate(g, (x, y))
    return Construction(certificate, dataclasses.replace(trace, steps=(TraceStep(rule, out.verts, PATH),)))


def replay_trace(g: Graph, trace: Trace) -> list[OrientedPath | Cycle]:
    """Re-apply every step of ``trace``; returns the starting shape and each result.

    Raises PathError with check ``replay`` when a step does not reproduce its
    recorded result, and RewriteError when a step no longer applies.
    """
    current: OrientedPath | Cycle = OrientedPath(g, trace.initial, trace.initial_virtual)
    shapes = [current]
    for i, step in enumerate(trace.steps, start=1):
        if step.rule.rule_id == FALLBACK:
            HamCertificate(step.kind, step.result).validate(g)
            current = Cycle(g, step.result) if step.kind == CYCLE else OrientedPath(g, step.result)
        else:
            current = apply_rewrite(g, current, step.rule)
        if current.verts != step.result or _kind_of(current) != step.kind:
            raise PathError(f"step {i} ({step.rule}) gave {current.verts}, trace says {step.result}",
                            check="replay")
        shapes.append(current)
    return shapes
