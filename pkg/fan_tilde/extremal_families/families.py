"""The three join constructions showing the degree bounds cannot be lowered.

Labelling is fixed so graph6 strings are stable: the clique part comes
first, then the independent part.  For G3 the K_(a-2) vertices come
first, then the K_1 vertex, then the two vertices of B.
"""

from __future__ import annotations

import dataclasses
import logging

from fan_tilde.bipartite_hole.holes import alpha_tilde
from fan_tilde.conditions.predicates import fan_tilde_condition
from fan_tilde.conditions.predicates import is_admissible
from fan_tilde.errors import InstanceTooLargeError
from fan_tilde.errors import PreconditionError
from fan_tilde.graph_core.connectivity import distance2_nonadjacent_pairs
from fan_tilde.graph_core.connectivity import is_k_connected
from fan_tilde.graph_core.formats import emit_graph6
from fan_tilde.graph_core.graph import Graph
from fan_tilde.ham_solver.solver import hamilton_cycle
from fan_tilde.ham_solver.solver import hamilton_path_between
from fan_tilde.ham_solver.solver import is_hamiltonian_connected

_log = logging.getLogger(__name__)

G1 = "g1"
G2 = "g2"
G3 = "g3"
FAMILIES = (G1, G2, G3)

MIN_PARAMETER = {G1: 1, G2: 1, G3: 5}
MAX_VERIFIED_ORDER = 14


@dataclasses.dataclass(frozen=True)
class FamilySpec:
    """A family id and its parameter (n for G1 and G2, a for G3)."""

    family: str
    parameter: int

    def __post_init__(self):
        family = self.family.strip().lower()
        if family not in FAMILIES:
            raise PreconditionError(f"unknown family {self.family!r}, expected one of {', '.join(FAMILIES)}")
        object.__setattr__(self, "family", family)
        low = MIN_PARAMETER[family]
        if self.parameter < low:
            raise PreconditionError(f"{family.upper()} needs a parameter of at least {low}, got {self.parameter}")

    @property
    def order(self) -> int:
        if self.family == G1:
            return 2 * self.parameter + 1
        if self.family == G2:
            return 2 * self.parameter
        return self.parameter + 1

    def __str__(self):
        return f"{self.family.upper()}({self.parameter})"


@dataclasses.dataclass(frozen=True)
class FamilyClaim:
    name: str
    expected: object
    observed: object

    @property
    def passed(self) -> bool:
        return self.expected == self.observed

    @property
    def details(self) -> dict[str, object]:
        return {"claim": self.name, "expected": self.expected, "observed": self.observed, "passed": self.passed}


@dataclasses.dataclass(frozen=True)
class FamilyReport:
    """Every claim checked on one family member."""

    spec: FamilySpec
    graph6: str
    claims: tuple[FamilyClaim, ...]

    @property
    def holds(self) -> bool:
        return all(claim.passed for claim in self.claims)

    def __bool__(self) -> bool:
        return self.holds

    @property
    def failed(self) -> list[FamilyClaim]:
        return [claim for claim in self.claims if not claim.passed]

    @property
    def details(self) -> dict[str, object]:
        return {
            "family": self.spec.family,
            "parameter": self.spec.parameter,
            "graph6": self.graph6,
            "holds": self.holds,
            "claims": [claim.details for claim in self.claims],
        }


def build_family(spec: FamilySpec) -> Graph:
    n = spec.parameter
    if spec.family == G1:
        return Graph.complete(n).join(Graph.empty(n + 1))
    if spec.family == G2:
        return Graph.complete(n).join(Graph.empty(n))
    return Graph.complete(n - 2).union(Graph.complete(1)).join(Graph.complete(2))


def _min_max_degree(g: Graph) -> int | None:
    """Smallest max{d(x), d(y)} over non-adjacent pairs at distance two."""
    degrees = g.degrees
    values = [max(degrees[x], degrees[y]) for x, y in distance2_nonadjacent_pairs(g)]
    return min(values) if values else None


def _g1_claims(g: Graph, n: int, alpha: int) -> list[FamilyClaim]:
    claims = [
        FamilyClaim("alpha-tilde", n + 1, alpha),
        FamilyClaim("fan-tilde holds at alpha-tilde - 1", True, fan_tilde_condition(g, alpha - 1).holds),
        FamilyClaim("fan-tilde holds at alpha-tilde", False, fan_tilde_condition(g, alpha).holds),
        FamilyClaim("hamiltonian", False, hamilton_cycle(g) is not None),
    ]
    if n >= 2:
        claims.insert(1, FamilyClaim("2-connected", True, is_k_connected(g, 2)))
    return claims


def _g2_claims(g: Graph, n: int, alpha: int) -> list[FamilyClaim]:
    claims = [
        FamilyClaim("alpha-tilde", n, alpha),
        FamilyClaim("fan-tilde holds at alpha-tilde", True, fan_tilde_condition(g, alpha).holds),
    ]
    # G2(1) is K_2, which has no distance-2 pair and is trivially connected.
    if n >= 2:
        connected = is_hamiltonian_connected(g)
        claims.append(FamilyClaim("admissible", False, is_admissible(g, alpha=alpha)))
        claims.append(FamilyClaim("hamiltonian-connected", False, connected.holds))
        observed = None if connected.failing_pair is None else list(connected.failing_pair)
        claims.append(FamilyClaim("first pair without a Hamilton path", [0, 1], observed))
    if n >= 3:
        claims.insert(1, FamilyClaim("3-connected", True, is_k_connected(g, 3)))
    return claims


def _g3_claims(g: Graph, a: int, alpha: int) -> list[FamilyClaim]:
    b1, b2 = a - 1, a
    return [
        FamilyClaim("alpha-tilde", 3, alpha),
        FamilyClaim("admissible", True, is_admissible(g, alpha=alpha)),
        FamilyClaim("2-connected", True, is_k_connected(g, 2)),
        FamilyClaim("3-connected", False, is_k_connected(g, 3)),
        FamilyClaim("Hamilton path between the B vertices", False, hamilton_path_between(g, b1, b2) is not None),
        FamilyClaim("smallest max-degree over distance-2 pairs", a - 1, _min_max_degree(g)),
    ]


def verify_family_claims(spec: FamilySpec) -> FamilyReport:
    """Evaluate the claims attached to a family member with the exact modules.

    Raises InstanceTooLargeError beyond MAX_VERIFIED_ORDER vertices.
    """
    if spec.order > MAX_VERIFIED_ORDER:
        raise InstanceTooLargeError(
            f"{spec} has {spec.order} vertices, exact checks stop at {MAX_VERIFIED_ORDER}"
        )
    g = build_family(spec)
    alpha = alpha_tilde(g).value
    if spec.family == G1:
        claims = _g1_claims(g, spec.parameter, alpha)
    elif spec.family == G2:
        claims = _g2_claims(g, spec.parameter, alpha)
    else:
        claims = _g3_claims(g, spec.parameter, alpha)
    report = FamilyReport(spec, emit_graph6(g), tuple(claims))
    for claim in report.failed:
        _log.warning("%s: claim %r expected %r, observed %r", spec, claim.name, claim.expected, claim.observed)
    return report
