import itertools

import pytest
from hypothesis import given
from hypothesis import settings

from fan_tilde.errors import RewriteError
from fan_tilde.graph_core.graph import Graph
from fan_tilde.ham_solver.paths import Cycle
from fan_tilde.ham_solver.paths import OrientedPath
from fan_tilde.ham_solver.solver import hamilton_path_between
from fan_tilde.ham_solver.solver import longest_path_from
from fan_tilde.rewrite_engine.rules import CROSSINGS
from fan_tilde.rewrite_engine.rules import CTL
from fan_tilde.rewrite_engine.rules import HP_RULES
from fan_tilde.rewrite_engine.rules import ROTATIONS
from fan_tilde.rewrite_engine.rules import RewriteRule
from fan_tilde.rewrite_engine.rules import apply_rewrite
from fan_tilde.rewrite_engine.rules import ctl_witness
from fan_tilde.rewrite_engine.rules import first_witness
from fan_tilde.rewrite_engine.rules import iter_witnesses
from fan_tilde.rewrite_engine.rules import rotation_endpoint
from fan_tilde.tests.strategies import graphs

LINE = (0, 1, 2, 3, 4)


def _path_graph(*extra: tuple[int, int]) -> Graph:
    return Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), *extra])


@pytest.mark.parametrize(
    ("extra", "rule", "expected"),
    [
        ([(0, 3)], RewriteRule("RT-A", (4,)), (2, 1, 0, 3, 4)),
        ([(0, 2), (1, 3)], RewriteRule("RT-B", (2, 4)), (2, 0, 1, 3, 4)),
        ([(0, 2), (2, 4), (1, 3)], RewriteRule("RC-0", (3, 3)), (2, 4, 3, 1, 0)),
        ([(1, 4), (0, 2)], RewriteRule("RC-1", (2,)), (0, 1, 4, 3, 2)),
        ([(0, 2), (0, 4)], RewriteRule("CLOSE"), (0, 1, 2, 3, 4)),
    ],
    ids=str,
)
def test_plain_path_rules(extra, rule: RewriteRule, expected: tuple[int, ...]):
    g = _path_graph(*extra)
    out = apply_rewrite(g, OrientedPath(g, LINE), rule)

    assert out.verts == expected
    assert set(out.verts) == set(LINE)


def test_rc2():
    # Edges v1 v4, v2 v5 and v5 v3.
    g = _path_graph((0, 3), (1, 4), (2, 4))
    out = apply_rewrite(g, OrientedPath(g, LINE), RewriteRule("RC-2", (4, 2)))

    assert isinstance(out, Cycle)
    assert out.verts == (0, 1, 4, 2, 3)


def test_hp1_removes_virtual_pair():
    # v4 v5 = 3-4 is virtual.
    g = Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (0, 3), (1, 4)])
    p = OrientedPath(g, LINE, virtual=4)
    out = apply_rewrite(g, p, RewriteRule("HP-1", (1, 2)))

    assert out.verts == (0, 3, 2, 1, 4)
    assert out.virtual is None


def test_reversed_hp_keeps_orientation():
    g = Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (0, 3), (1, 4)])
    p = OrientedPath(g, LINE, virtual=4).reversed()
    out = apply_rewrite(g, p, RewriteRule("HP-1", (1, 2), reverse=True))

    assert out.verts == (4, 1, 2, 3, 0)


def test_ext_at_either_end():
    g = Graph.path(3)

    assert apply_rewrite(g, OrientedPath(g, (0, 1)), RewriteRule("EXT", (2,))).verts == (0, 1, 2)
    assert apply_rewrite(g, OrientedPath(g, (1, 2)), RewriteRule("EXT", (0,), reverse=True)).verts == (0, 1, 2)


def test_ctl():
    g = Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 0), (2, 4)])
    cycle = Cycle(g, (0, 1, 2, 3))
    rule = ctl_witness(cycle)

    assert rule == RewriteRule(CTL, (3, 4))
    assert apply_rewrite(g, cycle, rule).verts == (4, 2, 3, 0, 1)
    assert ctl_witness(Cycle(Graph.cycle(4), (0, 1, 2, 3))) is None


@pytest.mark.parametrize(
    ("shape", "rule", "check"),
    [
        ("plain", RewriteRule("RC-1", (2,)), "edge v2 v4"),
        ("plain", RewriteRule("RT-A", (2,)), "index-range"),
        ("plain", RewriteRule("RT-A", (3, 4)), "arity"),
        ("plain", RewriteRule("XX-9", (1,)), "rule-id"),
        ("plain", RewriteRule("HP-1", (1, 2)), "virtual-edge"),
        ("plain", RewriteRule(CTL, (1, 0)), "input-shape"),
        ("plain", RewriteRule("EXT", (3,)), "off-path"),
        ("virtual", RewriteRule("RT-A", (3,)), "virtual-edge"),
        ("cycle", RewriteRule("RT-A", (3,)), "input-shape"),
        ("cycle", RewriteRule(CTL, (1, 0)), "off-cycle"),
        ("cycle", RewriteRule(CTL, (9, 4)), "index-range"),
        ("cycle", RewriteRule(CTL, (1, 4)), "edge w c_i"),
    ],
    ids=str,
)
def test_rejected_rewrites(shape: str, rule: RewriteRule, check: str):
    g = Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (0, 2)])
    target = {
        "plain": OrientedPath(g, (0, 1, 2, 3)),
        "virtual": OrientedPath(g, LINE, virtual=4),
        "cycle": Cycle(g, (0, 1, 2)),
    }[shape]

    with pytest.raises(RewriteError) as exc_info:
        apply_rewrite(g, target, rule)

    assert exc_info.value.check == check
    assert exc_info.value.rule == rule.rule_id


def test_rewrite_rejects_foreign_path():
    g = Graph.path(3)
    with pytest.raises(RewriteError) as exc_info:
        apply_rewrite(Graph.complete(3), OrientedPath(g, (0, 1, 2)), RewriteRule("CLOSE"))

    assert exc_info.value.check == "host"


def test_iter_witnesses_respects_allowed_slots():
    g = Graph.complete(5)
    p = OrientedPath(g, LINE)

    every = list(iter_witnesses(p, "RC-0"))
    restricted = list(iter_witnesses(p, "RC-0", allowed={0: {3}}))

    assert [rule.witness for rule in every] == [(2, 2), (2, 3), (2, 4), (3, 3), (3, 4), (4, 4)]
    assert [rule.witness for rule in restricted] == [(3, 3), (3, 4)]


def test_iter_witnesses_skips_wrong_shape():
    g = Graph.complete(5)

    assert list(iter_witnesses(OrientedPath(g, LINE), "HP-1")) == []
    assert first_witness(OrientedPath(g, LINE), HP_RULES) is None


def test_rotation_endpoint():
    g = _path_graph((0, 3))
    p = OrientedPath(g, LINE)
    rule = RewriteRule("RT-A", (4,))

    assert rotation_endpoint(p, rule) == apply_rewrite(g, p, rule).first == 2
    with pytest.raises(RewriteError):
        rotation_endpoint(p, RewriteRule("RC-1", (1,)))


def test_rule_str_and_details():
    rule = RewriteRule("RT-B", (2, 4), reverse=True)

    assert str(rule) == "~RT-B(2, 4)"
    assert rule.details == {"rule": "RT-B", "witness": [2, 4], "reverse": True}


@given(graphs(min_n=3, max_n=7))
@settings(deadline=None, max_examples=60)
def test_every_path_witness_rewrites(g: Graph):
    p = longest_path_from(g, OrientedPath(g, (0,)))
    for rule_id, reverse in itertools.product((*ROTATIONS, *CROSSINGS), (False, True)):
        for rule in iter_witnesses(p, rule_id, reverse=reverse):
            out = apply_rewrite(g, p, rule)
            assert sorted(out.verts) == sorted(p.verts)


@given(graphs(min_n=4, max_n=7))
@settings(deadline=None, max_examples=60)
def test_every_hp_witness_rewrites(g: Graph):
    for u, v in itertools.islice(g.non_edges(), 3):
        found = hamilton_path_between(g.with_edge(u, v), 0, g.n - 1)
        if found is None:
            continue
        ks = [i for i in range(1, g.n) if {found.verts[i - 1], found.verts[i]} == {u, v}]
        if not ks:
            continue
        p = OrientedPath(g, found.verts, ks[0])
        for rule_id, reverse in itertools.product(HP_RULES, (False, True)):
            for rule in iter_witnesses(p, rule_id, reverse=reverse):
                out = apply_rewrite(g, p, rule)
                assert out.virtual is None
                assert (out.first, out.last) == (p.first, p.last)
