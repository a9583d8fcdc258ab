import pytest
from hypothesis import given
from hypothesis import settings

from fan_tilde.conditions.constants import ADMISSIBLE
from fan_tilde.conditions.constants import ALL_CONDITIONS
from fan_tilde.conditions.constants import DIRAC
from fan_tilde.conditions.constants import FAN_TILDE
from fan_tilde.conditions.constants import LI_LIU_HAM
from fan_tilde.conditions.constants import LI_LIU_HC
from fan_tilde.conditions.constants import MCDIARMID_YOLOV
from fan_tilde.conditions.constants import ORE
from fan_tilde.conditions.constants import THM_HAM
from fan_tilde.conditions.constants import THM_HC
from fan_tilde.conditions.constants import ZHOU_ET_AL
from fan_tilde.conditions.predicates import condition_bound
from fan_tilde.conditions.predicates import evaluate_condition
from fan_tilde.conditions.predicates import fan_tilde_condition
from fan_tilde.conditions.predicates import induced_is_clique
from fan_tilde.conditions.predicates import is_admissible
from fan_tilde.conditions.predicates import normalise_condition_id
from fan_tilde.conditions.predicates import outside_vstar_diagnostic
from fan_tilde.conditions.predicates import prior_condition
from fan_tilde.conditions.predicates import theorem_ham_hypothesis
from fan_tilde.conditions.predicates import theorem_hc_hypothesis
from fan_tilde.conditions.predicates import v_star
from fan_tilde.errors import UnknownConditionError
from fan_tilde.errors import VertexRangeError
from fan_tilde.graph_core.graph import Graph
from fan_tilde.graph_core.graph import VertexSet
from fan_tilde.ham_solver.solver import hamilton_cycle
from fan_tilde.ham_solver.solver import is_hamiltonian_connected
from fan_tilde.tests.strategies import graphs

# K_2 joined with three independent vertices; alpha~ = 3.
K2_E3 = Graph.complete(2).join(Graph.empty(3))


@pytest.mark.parametrize(
    ("raw", "expected"),
    [("fan-tilde", FAN_TILDE), ("LI_LIU_HAM", LI_LIU_HAM), (" thm-hc ", THM_HC)],
    ids=str,
)
def test_normalise_condition_id(raw: str, expected: str):
    assert normalise_condition_id(raw) == expected


def test_unknown_condition():
    with pytest.raises(UnknownConditionError, match="unknown condition"):
        evaluate_condition(Graph.complete(3), "chvatal")


def test_prior_condition_rejects_new_conditions():
    with pytest.raises(UnknownConditionError, match="not a cited condition"):
        prior_condition(Graph.complete(3), FAN_TILDE)
    assert prior_condition(Graph.complete(3), DIRAC).holds


@pytest.mark.parametrize(
    ("condition_id", "bound"),
    [
        (DIRAC, 3),
        (ORE, 5),
        (MCDIARMID_YOLOV, 3),
        (LI_LIU_HAM, 6),
        (LI_LIU_HC, 7),
        (FAN_TILDE, 3),
        (ADMISSIBLE, 4),
        (THM_HAM, 3),
        (THM_HC, 4),
    ],
    ids=str,
)
def test_condition_bound(condition_id: str, bound: int):
    assert condition_bound(K2_E3, condition_id, 3) == bound


def test_cycle_fails_fan_tilde():
    report = evaluate_condition(Graph.cycle(5), FAN_TILDE)

    assert not report
    assert report.bound_used == 3
    assert report.violating_pair == (0, 2)
    assert report.violation_is_valid(Graph.cycle(5))
    assert report.details == {
        "condition": FAN_TILDE,
        "holds": False,
        "applies": False,
        "conclusion": "hamiltonian",
        "bound": 3,
        "side_conditions": {},
        "violating_pair": [0, 2],
    }


def test_dirac_reports_vertex():
    report = evaluate_condition(Graph.path(4), DIRAC)

    assert report.violating_vertex == 0
    assert report.violation_is_valid(Graph.path(4))


def test_side_conditions_are_reported_separately():
    report = evaluate_condition(K2_E3, THM_HAM)

    assert report.side_conditions == {"order>=3": True, "2-connected": True}
    assert not report.holds
    assert not report.applies


def test_complete_graph_meets_everything():
    g = Graph.complete(5)

    for condition_id in ALL_CONDITIONS:
        assert evaluate_condition(g, condition_id).applies, condition_id
    assert theorem_ham_hypothesis(g)
    assert theorem_hc_hypothesis(g)
    assert is_admissible(g)


def test_fan_tilde_condition_at_explicit_bound():
    assert fan_tilde_condition(K2_E3, 2).holds
    assert not fan_tilde_condition(K2_E3, 3).holds


def test_v_star():
    star = v_star(K2_E3)

    assert star.bound == 4
    assert star.members == VertexSet.from_iterable([0, 1])
    assert star.details == {"members": [0, 1], "bound": 4}


def test_induced_is_clique():
    assert induced_is_clique(K2_E3, VertexSet.from_iterable([0, 1, 2]))
    assert not induced_is_clique(K2_E3, VertexSet.from_iterable([2, 3]))
    with pytest.raises(VertexRangeError):
        induced_is_clique(K2_E3, VertexSet.from_iterable([7]))


def test_outside_vstar_diagnostic():
    assert outside_vstar_diagnostic(Graph.path(3)) == ["component [0, 1, 2] of G - V* is not a clique"]
    assert outside_vstar_diagnostic(K2_E3) == [
        "components [2] and [3] share a V* neighbour",
        "components [2] and [4] share a V* neighbour",
        "components [3] and [4] share a V* neighbour",
    ]


@given(graphs())
@settings(deadline=None)
def test_reported_violations_are_real(g: Graph):
    for condition_id in ALL_CONDITIONS:
        report = evaluate_condition(g, condition_id)
        assert report.violation_is_valid(g), report.details


@given(graphs())
@settings(deadline=None)
def test_degree_parts_imply_each_other(g: Graph):
    holds = {cid: evaluate_condition(g, cid).holds for cid in ALL_CONDITIONS}

    assert not holds[DIRAC] or holds[MCDIARMID_YOLOV]
    assert not holds[MCDIARMID_YOLOV] or holds[FAN_TILDE]
    assert not holds[LI_LIU_HAM] or holds[FAN_TILDE]
    assert not holds[LI_LIU_HAM] or holds[THM_HAM]
    assert not holds[LI_LIU_HC] or holds[ADMISSIBLE]
    assert not holds[ADMISSIBLE] or holds[FAN_TILDE]
    assert not holds[ZHOU_ET_AL] or holds[ADMISSIBLE]


@given(graphs())
@settings(deadline=None)
def test_admissible_graphs_are_cliques_outside_vstar(g: Graph):
    if is_admissible(g):
        assert outside_vstar_diagnostic(g) == []


@given(graphs(min_n=3))
@settings(deadline=None)
def test_hamiltonicity_hypothesis_gives_a_cycle(g: Graph):
    if theorem_ham_hypothesis(g):
        assert hamilton_cycle(g) is not None


@given(graphs(min_n=4))
@settings(deadline=None, max_examples=50)
def test_connectedness_hypothesis_gives_every_path(g: Graph):
    if theorem_hc_hypothesis(g):
        assert is_hamiltonian_connected(g).holds
