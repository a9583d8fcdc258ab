"""Per-graph verification: hypotheses, exact conclusions and the verdict.

Cheap facts are computed first.  A hamiltonian graph on at least three
vertices is 2-connected, and a hamiltonian-connected graph on at least
four vertices is 3-connected, so the exact solvers only run when
connectivity leaves the answer open.
"""

from __future__ import annotations

import collections
import dataclasses
import logging

from fan_tilde.bipartite_hole.holes import alpha_tilde
from fan_tilde.conditions.constants import ALL_CONDITIONS
from fan_tilde.conditions.constants import THM_HAM
from fan_tilde.conditions.constants import THM_HC
from fan_tilde.conditions.predicates import evaluate_condition
from fan_tilde.errors import FanTildeError
from fan_tilde.errors import ThresholdError
from fan_tilde.graph_core.connectivity import vertex_connectivity
from fan_tilde.graph_core.formats import emit_graph6
from fan_tilde.ham_solver.paths import OrientedPath
from fan_tilde.ham_solver.solver import hamilton_cycle
from fan_tilde.ham_solver.solver import hamilton_path_between
from fan_tilde.ham_solver.solver import is_hamiltonian_connected
from fan_tilde.ham_solver.solver import longest_path_from
from fan_tilde.rewrite_engine.driver import choose_virtual_edge
from fan_tilde.rewrite_engine.driver import construct_hamilton_cycle
from fan_tilde.rewrite_engine.driver import construct_hamilton_path
from fan_tilde.rewrite_engine.lemmas import check_split_lemmas
from fan_tilde.rewrite_engine.neighbor_split import SEC2
from fan_tilde.rewrite_engine.neighbor_split import SEC3
from fan_tilde.rewrite_engine.neighbor_split import compute_neighbor_split

TYPE_CHECKING = False
if TYPE_CHECKING:
    from collections.abc import Iterable

    from fan_tilde.graph_core.graph import Graph

_log = logging.getLogger(__name__)

CONSISTENT = "consistent"
COUNTEREXAMPLE = "COUNTEREXAMPLE"


@dataclasses.dataclass(frozen=True)
class VerificationRecord:
    """Everything the harness learned about one graph.

    Attributes:
        index : Position of the graph in its corpus.
        graph6 : The graph, encoded.
        alpha_tilde : Bipartite independence number.
        connectivity : Vertex connectivity, capped at 3.
        hypotheses : Condition id -> whether the full hypothesis applies.
        degree_conditions : Condition id -> whether the degree part holds.
        hamiltonian : Exact answer.
        hamiltonian_connected : Exact answer, or None when it was not needed.
        verdict : CONSISTENT or COUNTEREXAMPLE.
        trace_summary : Rule counts of the constructive drivers, if run.
        lemma_violations : Failed executable lemmas, if checked.

    """

    index: int
    graph6: str
    n: int
    alpha_tilde: int
    connectivity: int
    hypotheses: dict[str, bool]
    degree_conditions: dict[str, bool]
    hamiltonian: bool
    hamiltonian_connected: bool | None
    verdict: str
    trace_summary: dict[str, object] | None = None
    lemma_violations: tuple[str, ...] = ()

    @property
    def is_counterexample(self) -> bool:
        return self.verdict == COUNTEREXAMPLE

    @property
    def details(self) -> dict[str, object]:
        out: dict[str, object] = {
            "index": self.index,
            "graph6": self.graph6,
            "n": self.n,
            "alpha_tilde": self.alpha_tilde,
            "connectivity": self.connectivity,
            "hypotheses": dict(self.hypotheses),
            "degree_conditions": dict(self.degree_conditions),
            "conclusions": {
                "hamiltonian": self.hamiltonian,
                "hamiltonian_connected": self.hamiltonian_connected,
            },
            "verdict": self.verdict,
        }
        if self.trace_summary is not None:
            out["trace_summary"] = self.trace_summary
        if self.lemma_violations:
            out["lemma_violations"] = list(self.lemma_violations)
        return out


def _is_hamiltonian(g: Graph, connectivity: int) -> bool:
    if g.n < 3 or connectivity < 2:
        return False
    return hamilton_cycle(g) is not None


def _is_hamiltonian_connected(g: Graph, connectivity: int) -> bool:
    if g.n >= 4 and connectivity < 3:
        return False
    return is_hamiltonian_connected(g).holds


def _trace_summary(g: Graph, ham: bool, hc: bool) -> dict[str, object]:
    summary: dict[str, object] = {}
    if ham:
        construction = construct_hamilton_cycle(g)
        rules = collections.Counter(step.rule.rule_id for step in construction.trace.steps)
        summary["cycle"] = {"rules": dict(sorted(rules.items())), "fallback": construction.trace.fallback}
    if hc:
        rules = collections.Counter()
        fallbacks = pairs = 0
        for x in range(g.n):
            for y in range(x + 1, g.n):
                construction = construct_hamilton_path(g, x, y)
                rules.update(step.rule.rule_id for step in construction.trace.steps)
                fallbacks += construction.trace.fallback
                pairs += 1
        summary["paths"] = {"pairs": pairs, "rules": dict(sorted(rules.items())), "fallbacks": fallbacks}
    return summary


def _split_problems(g: Graph, p: OrientedPath, mode: str, st: tuple[int, int]) -> list[str]:
    try:
        split = compute_neighbor_split(g, p, mode, st=st)
    except ThresholdError:
        return []
    return [f"{list(p.verts)}: {problem}" for problem in check_split_lemmas(g, split)]


def lemma_violations(g: Graph, *, ham: bool, hc: bool) -> list[str]:
    """Run the executable lemmas on the contexts this graph offers.

    With the hamiltonicity hypothesis the endpoint split of a longest path
    is checked in both directions.  With the hamiltonian-connectedness
    hypothesis every Hamilton path of G + e that uses the virtual edge e
    is split around it.
    """
    result = alpha_tilde(g)
    st = result.witness_st
    problems = []
    if ham:
        p = longest_path_from(g, OrientedPath(g, (0,)))
        if p.m >= 3:
            problems += _split_problems(g, p, SEC2, st)
            problems += _split_problems(g, p.reversed(), SEC2, st)
    if hc:
        edge = choose_virtual_edge(g, result.value)
        if edge is not None:
            host = g.with_edge(*edge)
            for x in range(g.n):
                for y in range(x + 1, g.n):
                    found = hamilton_path_between(host, x, y)
                    if found is None:
                        continue
                    verts = found.verts
                    ks = [i for i in range(1, g.n) if {verts[i - 1], verts[i]} == set(edge)]
                    if not ks:
                        continue
                    p = OrientedPath(g, verts, ks[0])
                    if g.degree(p.v(ks[0])) > g.degree(p.v(ks[0] + 1)):
                        p = p.reversed()
                    problems += _split_problems(g, p, SEC3, st)
    return problems


def evaluate_graph(
    g: Graph,
    *,
    index: int = 0,
    checks: Iterable[str] = ALL_CONDITIONS,
    all_conclusions: bool = False,
    construct: bool = False,
    lemmas: bool = False,
) -> VerificationRecord:
    """Verify both theorems on ``g`` and record the listed conditions."""
    alpha = alpha_tilde(g).value
    connectivity = vertex_connectivity(g)
    reports = {cid: evaluate_condition(g, cid, alpha=alpha) for cid in dict.fromkeys((*checks, THM_HAM, THM_HC))}
    ham_hypothesis = reports[THM_HAM].applies
    hc_hypothesis = reports[THM_HC].applies

    ham = _is_hamiltonian(g, connectivity)
    hc = None
    if hc_hypothesis or all_conclusions:
        hc = _is_hamiltonian_connected(g, connectivity)
    counterexample = (ham_hypothesis and not ham) or (hc_hypothesis and hc is False)

    summary = None
    if construct and not counterexample:
        try:
            summary = _trace_summary(g, ham_hypothesis, hc_hypothesis)
        except FanTildeError as exc:
            _log.error("construction failed on %s: %s", emit_graph6(g), exc)
            summary = {"error": str(exc)}
    problems: list[str] = []
    if lemmas and (ham_hypothesis or hc_hypothesis):
        problems = lemma_violations(g, ham=ham_hypothesis, hc=hc_hypothesis)

    return VerificationRecord(
        index=index,
        graph6=emit_graph6(g),
        n=g.n,
        alpha_tilde=alpha,
        connectivity=connectivity,
        hypotheses={cid: report.applies for cid, report in reports.items()},
        degree_conditions={cid: report.holds for cid, report in reports.items()},
        hamiltonian=ham,
        hamiltonian_connected=hc,
        verdict=COUNTEREXAMPLE if counterexample else CONSISTENT,
        trace_summary=summary,
        lemma_violations=tuple(problems),
    )
