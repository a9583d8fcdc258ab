import pytest

from fan_tilde.graph_core.graph import Graph
from fan_tilde.harness.records import CONSISTENT
from fan_tilde.harness.records import evaluate_graph
from fan_tilde.harness.records import lemma_violations


def test_complete_graph_record():
    record = evaluate_graph(Graph.complete(4), index=3)

    assert record.index == 3
    assert record.graph6 == "C~"
    assert record.alpha_tilde == 1
    assert record.connectivity == 3
    assert record.hypotheses["thm-ham"]
    assert record.hypotheses["thm-hc"]
    assert record.hamiltonian
    assert record.hamiltonian_connected
    assert record.verdict == CONSISTENT
    assert not record.is_counterexample


def test_cycle_record():
    record = evaluate_graph(Graph.cycle(5))

    assert record.alpha_tilde == 3
    assert record.connectivity == 2
    assert not record.hypotheses["thm-ham"]
    assert not record.degree_conditions["fan-tilde"]
    assert record.hamiltonian
    assert record.hamiltonian_connected is None
    assert record.verdict == CONSISTENT


def test_all_conclusions():
    record = evaluate_graph(Graph.cycle(5), all_conclusions=True)

    assert record.hamiltonian_connected is False


@pytest.mark.parametrize(
    "g",
    [Graph.path(4), Graph.empty(3), Graph.complete(1), Graph.complete(2)],
    ids=["P4", "E3", "K1", "K2"],
)
def test_not_hamiltonian(g: Graph):
    record = evaluate_graph(g)

    assert not record.hamiltonian
    assert record.verdict == CONSISTENT


def test_checks_are_recorded():
    record = evaluate_graph(Graph.complete(4), checks=("dirac",))

    assert list(record.hypotheses) == ["dirac", "thm-ham", "thm-hc"]


def test_construct_summary():
    record = evaluate_graph(Graph.complete(4), construct=True)

    assert record.trace_summary == {
        "cycle": {"rules": {"CLOSE": 1, "EXT": 3}, "fallback": False},
        "paths": {"pairs": 6, "rules": {}, "fallbacks": 0},
    }


def test_details():
    details = evaluate_graph(Graph.cycle(5)).details

    assert details["conclusions"] == {"hamiltonian": True, "hamiltonian_connected": None}
    assert details["verdict"] == CONSISTENT
    assert "trace_summary" not in details
    assert "lemma_violations" not in details


@pytest.mark.parametrize(
    "g",
    [
        Graph.complete(4),
        Graph.from_edges(5, [edge for edge in Graph.complete(5).edges() if edge != (3, 4)]),
        Graph.complete_bipartite(3, 3),
        Graph.complete(2).join(Graph.empty(3)),
    ],
    ids=["K4", "K5-e", "K33", "K2+E3"],
)
def test_lemmas_hold(g: Graph):
    assert lemma_violations(g, ham=True, hc=g.n >= 4) == []
