import pytest

from fan_tilde.errors import GraphFormatError
from fan_tilde.errors import GraphSizeError
from fan_tilde.errors import SelfLoopError
from fan_tilde.errors import VertexRangeError
from fan_tilde.graph_core.graph import Graph
from fan_tilde.graph_core.graph import VertexSet


def test_from_edges_is_symmetric():
    g = Graph.from_edges(4, [(0, 1), (2, 1), (3, 0)])

    assert g.has_edge(1, 0)
    assert g.has_edge(1, 2)
    assert not g.has_edge(2, 3)
    assert g.degrees == (2, 2, 1, 1)
    assert list(g.edges()) == [(0, 1), (0, 3), (1, 2)]


@pytest.mark.parametrize(
    ("g", "edge_count", "min_degree"),
    [
        (Graph.empty(5), 0, 0),
        (Graph.complete(5), 10, 4),
        (Graph.cycle(6), 6, 2),
        (Graph.path(4), 3, 1),
        (Graph.complete_bipartite(2, 3), 6, 2),
    ],
    ids=["empty", "complete", "cycle", "path", "complete-bipartite"],
)
def test_standard_graphs(g: Graph, edge_count: int, min_degree: int):
    assert g.edge_count == edge_count
    assert g.min_degree == min_degree


def test_complement():
    assert Graph.complete(4).complement() == Graph.empty(4)
    assert Graph.cycle(5).complement() == Graph.from_edges(5, [(0, 2), (0, 3), (1, 3), (1, 4), (2, 4)])


def test_union_shifts_second_graph():
    g = Graph.complete(2).union(Graph.complete(2))

    assert g.n == 4
    assert list(g.edges()) == [(0, 1), (2, 3)]


def test_join_adds_every_cross_edge():
    g = Graph.complete(2).join(Graph.empty(3))

    assert g.degrees == (4, 4, 2, 2, 2)
    assert list(g.non_edges()) == [(2, 3), (2, 4), (3, 4)]


def test_with_edge():
    g = Graph.path(3).with_edge(0, 2)

    assert g == Graph.complete(3)
    with pytest.raises(SelfLoopError):
        g.with_edge(1, 1)


def test_is_clique():
    g = Graph.complete(3).union(Graph.empty(1))

    assert g.is_clique(0b0111)
    assert not g.is_clique(0b1011)
    assert g.is_clique(0)


def test_neighbourhood():
    g = Graph.path(5)

    assert g.neighbourhood(0b00001) == 0b00010
    assert g.neighbourhood(0b10001) == 0b01010
    assert g.neighbours(2) == VertexSet.from_iterable([1, 3])


def test_vertex_set_operations():
    a = VertexSet.from_iterable([0, 2, 5])
    b = VertexSet.from_iterable([2, 3])

    assert list(a) == [0, 2, 5]
    assert len(a) == 3
    assert 5 in a and 4 not in a and -1 not in a
    assert (a | b).details == [0, 2, 3, 5]
    assert (a & b).details == [2]
    assert (a - b).details == [0, 5]
    assert not a.isdisjoint(b)


@pytest.mark.parametrize(
    ("build", "error"),
    [
        (lambda: Graph(0, ()), GraphSizeError),
        (lambda: Graph(65, (0,) * 65), GraphSizeError),
        (lambda: Graph(2, (0,)), GraphSizeError),
        (lambda: Graph.cycle(2), GraphSizeError),
        (lambda: Graph.from_edges(3, [(0, 0)]), SelfLoopError),
        (lambda: Graph.from_edges(3, [(0, 3)]), VertexRangeError),
        (lambda: Graph(2, (0b100, 0)), VertexRangeError),
        (lambda: Graph(2, (0b01, 0b10)), SelfLoopError),
    ],
    ids=str,
)
def test_invalid_graphs(build, error):
    with pytest.raises(error):
        build()


def test_asymmetric_rows_rejected():
    with pytest.raises(GraphFormatError, match="not symmetric"):
        Graph(2, (0b10, 0))


def test_vertex_range_on_queries():
    g = Graph.path(3)

    with pytest.raises(VertexRangeError):
        g.degree(3)
    with pytest.raises(VertexRangeError):
        g.has_edge(-1, 0)
