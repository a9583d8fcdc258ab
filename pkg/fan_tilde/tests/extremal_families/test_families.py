import pytest

from fan_tilde.errors import InstanceTooLargeError
from fan_tilde.errors import PreconditionError
from fan_tilde.extremal_families.families import FamilySpec
from fan_tilde.extremal_families.families import build_family
from fan_tilde.extremal_families.families import verify_family_claims
from fan_tilde.graph_core.formats import emit_graph6


@pytest.mark.parametrize(
    ("family", "parameter", "order"),
    [
        ("g1", 1, 3),
        ("g1", 3, 7),
        ("g2", 2, 4),
        ("g2", 5, 10),
        ("g3", 5, 6),
        ("g3", 8, 9),
    ],
    ids=str,
)
def test_order(family: str, parameter: int, order: int):
    spec = FamilySpec(family, parameter)

    assert spec.order == order
    assert build_family(spec).n == order


def test_family_id_is_normalised():
    spec = FamilySpec(" G2 ", 3)

    assert spec.family == "g2"
    assert str(spec) == "G2(3)"


@pytest.mark.parametrize(
    ("family", "parameter"),
    [("g4", 3), ("g1", 0), ("g2", -1), ("g3", 4)],
    ids=str,
)
def test_invalid_spec(family: str, parameter: int):
    with pytest.raises(PreconditionError):
        FamilySpec(family, parameter)


def test_degrees():
    assert build_family(FamilySpec("g1", 3)).degrees == (6, 6, 6, 3, 3, 3, 3)
    assert build_family(FamilySpec("g2", 3)).degrees == (5, 5, 5, 3, 3, 3)
    # K3 first, then the K1 vertex, then B
    assert build_family(FamilySpec("g3", 5)).degrees == (4, 4, 4, 2, 5, 5)


def test_g3_separator():
    g = build_family(FamilySpec("g3", 6))

    assert list(g.neighbours(4)) == [5, 6]
    assert list(g.neighbours(5)) == [0, 1, 2, 3, 4, 6]


@pytest.mark.parametrize(
    ("family", "parameter"),
    [("g1", n) for n in range(1, 5)] + [("g2", n) for n in range(1, 6)] + [("g3", a) for a in range(5, 9)],
    ids=str,
)
def test_claims_hold(family: str, parameter: int):
    report = verify_family_claims(FamilySpec(family, parameter))

    assert report.holds, report.failed
    assert report.graph6 == emit_graph6(build_family(report.spec))


def test_g2_claims():
    report = verify_family_claims(FamilySpec("g2", 2))
    claims = {claim.name: claim.observed for claim in report.claims}

    assert claims["alpha-tilde"] == 2
    assert claims["admissible"] is False
    assert claims["first pair without a Hamilton path"] == [0, 1]
    assert "3-connected" not in claims


def test_report_details():
    details = verify_family_claims(FamilySpec("g1", 1)).details

    assert details["family"] == "g1"
    assert details["parameter"] == 1
    assert details["holds"] is True
    assert details["claims"][0] == {"claim": "alpha-tilde", "expected": 2, "observed": 2, "passed": True}


@pytest.mark.parametrize("spec", [FamilySpec("g1", 7), FamilySpec("g2", 8), FamilySpec("g3", 14)], ids=str)
def test_too_large(spec: FamilySpec):
    with pytest.raises(InstanceTooLargeError):
        verify_family_claims(spec)
