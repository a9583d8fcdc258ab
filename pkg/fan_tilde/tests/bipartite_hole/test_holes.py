import networkx as nx
import pytest
from hypothesis import given
from hypothesis import settings

from fan_tilde.bipartite_hole.holes import BipartiteHole
from fan_tilde.bipartite_hole.holes import alpha_tilde
from fan_tilde.bipartite_hole.holes import alpha_tilde_upper_bound_from_min_degree
from fan_tilde.bipartite_hole.holes import st_property_holds
from fan_tilde.errors import PreconditionError
from fan_tilde.graph_core.graph import Graph
from fan_tilde.graph_core.graph import VertexSet
from fan_tilde.tests.strategies import brute_force_alpha_tilde
from fan_tilde.tests.strategies import brute_force_has_hole
from fan_tilde.tests.strategies import from_networkx
from fan_tilde.tests.strategies import graphs
from fan_tilde.tests.strategies import to_networkx


@pytest.mark.parametrize(
    ("g", "value", "witness"),
    [
        (Graph.empty(1), 1, (1, 1)),
        (Graph.complete(5), 1, (1, 1)),
        (Graph.empty(4), 4, (1, 4)),
        (Graph.path(4), 3, (1, 3)),
        (Graph.cycle(5), 3, (1, 3)),
        (Graph.complete_bipartite(3, 3), 3, (1, 3)),
        (from_networkx(nx.petersen_graph()), 5, (3, 3)),
    ],
    ids=["K1", "K5", "E4", "P4", "C5", "K33", "petersen"],
)
def test_alpha_tilde(g: Graph, value: int, witness: tuple[int, int]):
    result = alpha_tilde(g)

    assert result.value == value
    assert result.witness_st == witness


def test_alpha_tilde_details():
    result = alpha_tilde(Graph.cycle(5))

    assert result.details == {
        "value": 3,
        "witness": {"s": 1, "t": 3},
        "holes": [
            {"s": 1, "t": 2, "a": [0], "b": [2, 3]},
            {"s": 2, "t": 1, "a": [2, 3], "b": [0]},
        ],
    }


@given(graphs(max_n=6))
@settings(deadline=None, max_examples=60)
def test_alpha_tilde_matches_brute_force(g: Graph):
    graph = to_networkx(g)
    result = alpha_tilde(g)

    assert result.value == brute_force_alpha_tilde(graph)
    s, t = result.witness_st
    assert s <= t and s + t == result.value + 1
    assert not brute_force_has_hole(graph, s, t)


@given(graphs())
@settings(deadline=None)
def test_lower_bound_holes_are_valid(g: Graph):
    result = alpha_tilde(g)

    assert len(result.lower_bound_holes) == result.value - 1
    for s, hole in enumerate(result.lower_bound_holes, start=1):
        assert hole.st == (s, result.value - s)
        assert hole.is_valid(g), hole.problems(g)


@given(graphs())
@settings(deadline=None)
def test_alpha_tilde_is_at_least_independence_number(g: Graph):
    independence = max(len(c) for c in nx.find_cliques(nx.complement(to_networkx(g))))

    assert alpha_tilde(g).value >= independence


def test_st_property_returns_first_hole():
    check = st_property_holds(Graph.path(4), 1, 2)

    assert not check
    assert check.hole == BipartiteHole(VertexSet.from_iterable([0]), VertexSet.from_iterable([2, 3]))


def test_st_property_vacuous_beyond_order():
    check = st_property_holds(Graph.empty(3), 2, 2)

    assert check
    assert check.hole is None


def test_st_property_rejects_empty_side():
    with pytest.raises(PreconditionError):
        st_property_holds(Graph.empty(3), 0, 2)


@pytest.mark.parametrize(
    ("hole", "problem"),
    [
        (BipartiteHole(VertexSet(0), VertexSet(0b1)), "both sides must be non-empty"),
        (BipartiteHole(VertexSet(0b11), VertexSet(0b10)), "sides overlap"),
        (BipartiteHole(VertexSet(0b1), VertexSet(0b10)), "edge between the sides"),
        (BipartiteHole(VertexSet(0b1), VertexSet(0b10000)), "vertex outside the graph"),
    ],
    ids=str,
)
def test_hole_problems(hole: BipartiteHole, problem: str):
    assert problem in hole.problems(Graph.path(4))


@pytest.mark.parametrize(
    ("g", "bound"),
    [
        (Graph.complete(4), 2),
        (Graph.complete_bipartite(3, 3), 3),
        (Graph.cycle(4), 2),
    ],
    ids=["K4", "K33", "C4"],
)
def test_upper_bound_from_min_degree(g: Graph, bound: int):
    assert alpha_tilde_upper_bound_from_min_degree(g) == bound
    assert alpha_tilde(g).value <= bound


def test_upper_bound_needs_dirac_premise():
    with pytest.raises(PreconditionError, match="Dirac premise"):
        alpha_tilde_upper_bound_from_min_degree(Graph.cycle(5))


@given(graphs(max_n=6))
@settings(deadline=None, max_examples=60)
def test_adding_an_edge_never_raises_alpha_tilde(g: Graph):
    value = alpha_tilde(g).value
    for u, v in g.non_edges():
        assert alpha_tilde(g.with_edge(u, v)).value <= value, (u, v)
