import pytest

from fan_tilde.errors import PathError
from fan_tilde.graph_core.graph import Graph
from fan_tilde.ham_solver.paths import CYCLE
from fan_tilde.ham_solver.paths import PATH
from fan_tilde.ham_solver.paths import Cycle
from fan_tilde.ham_solver.paths import HamCertificate
from fan_tilde.ham_solver.paths import OrientedPath

P5 = Graph.path(5)
# Path 0-1-2-3 with 3 and 4 not adjacent, so 3-4 can only be virtual.
P4_PLUS = Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (0, 4)])


def test_positions_are_one_based():
    p = OrientedPath(P5, (0, 1, 2, 3, 4))

    assert p.m == 5
    assert (p.first, p.last) == (0, 4)
    assert p.v(1) == 0 and p.v(5) == 4
    assert p.position(3) == 4
    assert p.successor(4) is None and p.successor(1) == 2
    assert p.predecessor(0) is None and p.predecessor(1) == 0
    assert 2 in p and 7 not in p
    with pytest.raises(IndexError):
        p.v(0)


def test_segments_walk_either_way():
    p = OrientedPath(P5, (0, 1, 2, 3, 4))

    assert p.seg(2, 4) == (1, 2, 3)
    assert p.seg(4, 2) == (3, 2, 1)
    assert p.seg(3, 3) == (2,)


def test_reversed_moves_virtual_position():
    p = OrientedPath(P4_PLUS, (0, 1, 2, 3, 4), virtual=4)
    back = p.reversed()

    assert back.verts == (4, 3, 2, 1, 0)
    assert back.virtual == 1
    assert back.details == {"kind": PATH, "verts": [4, 3, 2, 1, 0], "virtual": 1}
    assert back.reversed() == p


@pytest.mark.parametrize(
    ("verts", "virtual", "check"),
    [
        ((), None, "empty"),
        ((0, 5), None, "vertex-range"),
        ((0, 1, 0), None, "distinct"),
        ((0, 2), None, "edge"),
        ((0, 1, 2), 3, "virtual-position"),
        ((0, 1, 2), 1, "virtual-edge"),
    ],
    ids=str,
)
def test_invalid_paths(verts: tuple[int, ...], virtual: int | None, check: str):
    with pytest.raises(PathError) as exc_info:
        OrientedPath(P5, verts, virtual)

    assert exc_info.value.check == check


def test_cycle():
    c = Cycle(Graph.cycle(4), (0, 1, 2, 3))

    assert c.is_spanning
    assert c.details == {"kind": CYCLE, "verts": [0, 1, 2, 3]}


@pytest.mark.parametrize(
    ("verts", "check"),
    [
        ((0, 1), "cycle-length"),
        ((0, 1, 2), "edge"),
        ((0, 1, 1, 2), "distinct"),
    ],
    ids=str,
)
def test_invalid_cycles(verts: tuple[int, ...], check: str):
    with pytest.raises(PathError) as exc_info:
        Cycle(Graph.cycle(4), verts)

    assert exc_info.value.check == check


@pytest.mark.parametrize(
    ("certificate", "endpoints", "check"),
    [
        (HamCertificate("walk", (0, 1, 2, 3)), None, "kind"),
        (HamCertificate(CYCLE, (0, 1, 2)), None, "spanning"),
        (HamCertificate(CYCLE, (0, 2, 1, 3)), None, "edge"),
        (HamCertificate(PATH, (0, 1, 2, 3)), (0, 2), "endpoints"),
    ],
    ids=str,
)
def test_certificate_validation(certificate: HamCertificate, endpoints: tuple[int, int] | None, check: str):
    with pytest.raises(PathError) as exc_info:
        certificate.validate(Graph.cycle(4), endpoints)

    assert exc_info.value.check == check
    assert not certificate.is_valid(Graph.cycle(4), endpoints)


def test_valid_certificates():
    g = Graph.cycle(4)

    assert HamCertificate(CYCLE, (0, 1, 2, 3)).is_valid(g)
    assert HamCertificate(PATH, (1, 2, 3, 0)).is_valid(g, (0, 1))
    assert HamCertificate(PATH, (1, 2, 3, 0)).endpoints == (1, 0)
