"""Degree-condition predicates and the structural predicates around V*.

``holds`` in a ConditionReport is the degree part only.  Order and
connectivity assumptions are reported separately in ``side_conditions``;
``applies`` combines both.
"""

from __future__ import annotations

import dataclasses

from fan_tilde.bipartite_hole.holes import alpha_tilde
from fan_tilde.conditions.constants import ADMISSIBLE
from fan_tilde.conditions.constants import ALL_CONDITIONS
from fan_tilde.conditions.constants import DEGREE_SUM
from fan_tilde.conditions.constants import DIRAC
from fan_tilde.conditions.constants import FAN_CLASSIC
from fan_tilde.conditions.constants import FAN_TILDE
from fan_tilde.conditions.constants import LI_LIU_HAM
from fan_tilde.conditions.constants import LI_LIU_HC
from fan_tilde.conditions.constants import MAX_DEGREE
from fan_tilde.conditions.constants import MCDIARMID_YOLOV
from fan_tilde.conditions.constants import ORE
from fan_tilde.conditions.constants import OVER_DISTANCE_TWO
from fan_tilde.conditions.constants import OVER_NONADJACENT
from fan_tilde.conditions.constants import OVER_VERTICES
from fan_tilde.conditions.constants import PRIOR_CONDITIONS
from fan_tilde.conditions.constants import SHAPES
from fan_tilde.conditions.constants import SIDE_CONNECTED
from fan_tilde.conditions.constants import SIDE_ORDER
from fan_tilde.conditions.constants import THM_HAM
from fan_tilde.conditions.constants import THM_HC
from fan_tilde.conditions.constants import ZHOU_ET_AL
from fan_tilde.errors import UnknownConditionError
from fan_tilde.errors import VertexRangeError
from fan_tilde.graph_core.connectivity import distance2_nonadjacent_pairs
from fan_tilde.graph_core.connectivity import is_k_connected
from fan_tilde.graph_core.graph import VertexSet
from fan_tilde.graph_core.graph import iter_bits

TYPE_CHECKING = False
if TYPE_CHECKING:
    from collections.abc import Iterable

    from fan_tilde.graph_core.graph import Graph


def normalise_condition_id(condition_id: str) -> str:
    """Accept ``li_liu_ham`` as well as ``li-liu-ham``."""
    normalised = condition_id.strip().lower().replace("_", "-")
    if normalised not in SHAPES:
        known = ", ".join(ALL_CONDITIONS)
        raise UnknownConditionError(f"unknown condition {condition_id!r}, expected one of {known}")
    return normalised


@dataclasses.dataclass(frozen=True)
class ConditionReport:
    """Outcome of one condition on one graph.

    Attributes:
        condition_id : One of ALL_CONDITIONS.
        holds : Whether the degree part holds.
        bound_used : The threshold the combined degrees were compared against.
        violating_pair : First offending pair for pair conditions.
        violating_vertex : First offending vertex for minimum-degree conditions.
        side_conditions : Order and connectivity assumptions, each evaluated.

    """

    condition_id: str
    holds: bool
    bound_used: int
    violating_pair: tuple[int, int] | None = None
    violating_vertex: int | None = None
    side_conditions: dict[str, bool] = dataclasses.field(default_factory=dict)

    def __bool__(self) -> bool:
        return self.holds

    @property
    def applies(self) -> bool:
        return self.holds and all(self.side_conditions.values())

    @property
    def conclusion(self) -> str:
        return SHAPES[self.condition_id].conclusion

    def violation_is_valid(self, g: Graph) -> bool:
        """Re-check the reported violation against ``g`` from scratch."""
        shape = SHAPES[self.condition_id]
        if self.holds:
            return self.violating_pair is None and self.violating_vertex is None
        if shape.over == OVER_VERTICES:
            v = self.violating_vertex
            return v is not None and 0 <= v < g.n and g.degree(v) < self.bound_used
        if self.violating_pair is None:
            return False
        x, y = self.violating_pair
        if x == y or g.has_edge(x, y):
            return False
        if shape.over == OVER_DISTANCE_TWO and not g.adj[x] & g.adj[y]:
            return False
        dx, dy = g.degree(x), g.degree(y)
        if shape.measure == DEGREE_SUM:
            return dx + dy < self.bound_used
        return dx < self.bound_used and dy < self.bound_used

    @property
    def details(self) -> dict[str, object]:
        out: dict[str, object] = {
            "condition": self.condition_id,
            "holds": self.holds,
            "applies": self.applies,
            "conclusion": self.conclusion,
            "bound": self.bound_used,
            "side_conditions": dict(self.side_conditions),
        }
        if self.violating_pair is not None:
            out["violating_pair"] = list(self.violating_pair)
        if self.violating_vertex is not None:
            out["violating_vertex"] = self.violating_vertex
        return out


def _pairs_for(g: Graph, over: str) -> Iterable[tuple[int, int]]:
    if over == OVER_DISTANCE_TWO:
        return distance2_nonadjacent_pairs(g)
    return g.non_edges()


def _evaluate(g: Graph, condition_id: str, bound: int) -> ConditionReport:
    shape = SHAPES[condition_id]
    sides = {}
    if shape.min_order:
        sides[SIDE_ORDER.format(shape.min_order)] = g.n >= shape.min_order
    if shape.connectivity:
        sides[SIDE_CONNECTED.format(shape.connectivity)] = is_k_connected(g, shape.connectivity)
    degrees = g.degrees
    if shape.over == OVER_VERTICES:
        for v in range(g.n):
            if degrees[v] < bound:
                return ConditionReport(condition_id, False, bound, violating_vertex=v, side_conditions=sides)
        return ConditionReport(condition_id, True, bound, side_conditions=sides)
    for x, y in _pairs_for(g, shape.over):
        if shape.measure == DEGREE_SUM:
            combined = degrees[x] + degrees[y]
        else:
            combined = max(degrees[x], degrees[y])
        if combined < bound:
            return ConditionReport(condition_id, False, bound, violating_pair=(x, y), side_conditions=sides)
    return ConditionReport(condition_id, True, bound, side_conditions=sides)


def condition_bound(g: Graph, condition_id: str, alpha: int) -> int:
    """The threshold a condition compares degrees against."""
    half = (g.n + 1) // 2  # d >= n/2 for integers
    return {
        DIRAC: half,
        ORE: g.n,
        FAN_CLASSIC: half,
        MCDIARMID_YOLOV: alpha,
        ZHOU_ET_AL: alpha + 1,
        LI_LIU_HAM: 2 * alpha,
        LI_LIU_HC: 2 * alpha + 1,
        FAN_TILDE: alpha,
        ADMISSIBLE: alpha + 1,
        THM_HAM: alpha,
        THM_HC: alpha + 1,
    }[condition_id]


def fan_tilde_condition(g: Graph, bound: int) -> ConditionReport:
    """max{d(x), d(y)} >= bound over every non-adjacent pair at distance two."""
    return _evaluate(g, FAN_TILDE, bound)


def evaluate_condition(g: Graph, condition_id: str, *, alpha: int | None = None) -> ConditionReport:
    """Evaluate any condition in ALL_CONDITIONS; ``alpha`` skips recomputing it."""
    condition_id = normalise_condition_id(condition_id)
    if alpha is None:
        alpha = alpha_tilde(g).value
    return _evaluate(g, condition_id, condition_bound(g, condition_id, alpha))


def prior_condition(g: Graph, condition_id: str, *, alpha: int | None = None) -> ConditionReport:
    normalised = normalise_condition_id(condition_id)
    if normalised not in PRIOR_CONDITIONS:
        known = ", ".join(PRIOR_CONDITIONS)
        raise UnknownConditionError(f"{condition_id!r} is not a cited condition, expected one of {known}")
    return evaluate_condition(g, normalised, alpha=alpha)


def theorem_ham_hypothesis(g: Graph, *, alpha: int | None = None) -> bool:
    return evaluate_condition(g, THM_HAM, alpha=alpha).applies


def theorem_hc_hypothesis(g: Graph, *, alpha: int | None = None) -> bool:
    return evaluate_condition(g, THM_HC, alpha=alpha).applies


def is_admissible(g: Graph, *, alpha: int | None = None) -> bool:
    return evaluate_condition(g, ADMISSIBLE, alpha=alpha).holds


@dataclasses.dataclass(frozen=True)
class VStar:
    """Vertices of degree at least alpha~ + 1."""

    members: VertexSet
    bound: int

    @property
    def details(self) -> dict[str, object]:
        return {"members": self.members.details, "bound": self.bound}


def v_star(g: Graph, *, alpha: int | None = None) -> VStar:
    if alpha is None:
        alpha = alpha_tilde(g).value
    bound = alpha + 1
    return VStar(VertexSet.from_iterable(v for v in range(g.n) if g.degrees[v] >= bound), bound)


def induced_is_clique(g: Graph, s: VertexSet) -> bool:
    if s.members & ~g.all_mask:
        raise VertexRangeError(f"vertex set {s.details} leaves 0..{g.n - 1}")
    return g.is_clique(s.members)


def _components(g: Graph, within: int) -> list[int]:
    found = []
    left = within
    while left:
        start = (left & -left).bit_length() - 1
        seen = frontier = 1 << start
        while frontier:
            frontier = g.neighbourhood(frontier) & within & ~seen
            seen |= frontier
        found.append(seen)
        left &= ~seen
    return found


def outside_vstar_diagnostic(g: Graph, *, alpha: int | None = None) -> list[str]:
    """Structure every admissible graph has around V*, as a list of failures.

    Each component of G - V* must be a clique, and two vertices from
    different components must share no neighbour in V*.  Either failure
    exhibits a distance-two pair whose degrees are both at most alpha~.
    """
    star = v_star(g, alpha=alpha)
    outside = g.all_mask & ~star.members.members
    components = _components(g, outside)
    problems = []
    for component in components:
        if not g.is_clique(component):
            problems.append(f"component {list(iter_bits(component))} of G - V* is not a clique")
    for i, first in enumerate(components):
        reached = g.neighbourhood(first) & star.members.members
        for second in components[i + 1:]:
            if g.neighbourhood(second) & reached:
                problems.append(
                    f"components {list(iter_bits(first))} and {list(iter_bits(second))} share a V* neighbour"
                )
    return problems
