"""Identifiers and quantifier shapes of the supported degree conditions."""

from __future__ import annotations

import dataclasses

DIRAC = "dirac"
ORE = "ore"
FAN_CLASSIC = "fan-classic"
MCDIARMID_YOLOV = "mcdiarmid-yolov"
ZHOU_ET_AL = "zhou-et-al"
LI_LIU_HAM = "li-liu-ham"
LI_LIU_HC = "li-liu-hc"
FAN_TILDE = "fan-tilde"
ADMISSIBLE = "admissible"
THM_HAM = "thm-ham"
THM_HC = "thm-hc"

PRIOR_CONDITIONS = (DIRAC, ORE, FAN_CLASSIC, MCDIARMID_YOLOV, ZHOU_ET_AL, LI_LIU_HAM, LI_LIU_HC)
ALL_CONDITIONS = (*PRIOR_CONDITIONS, FAN_TILDE, ADMISSIBLE, THM_HAM, THM_HC)

# What each quantifier ranges over
OVER_VERTICES = "vertices"
OVER_NONADJACENT = "nonadjacent"
OVER_DISTANCE_TWO = "distance-2"

# How the degrees of a pair are combined before comparing to the bound
MIN_DEGREE = "degree"
DEGREE_SUM = "sum"
MAX_DEGREE = "max"

HAMILTONIAN = "hamiltonian"
HAMILTONIAN_CONNECTED = "hamiltonian-connected"


@dataclasses.dataclass(frozen=True)
class ConditionShape:
    """How a condition quantifies, and what it promises.

    Attributes:
        over : OVER_VERTICES, OVER_NONADJACENT or OVER_DISTANCE_TWO.
        measure : MIN_DEGREE, DEGREE_SUM or MAX_DEGREE.
        conclusion : HAMILTONIAN or HAMILTONIAN_CONNECTED.
        connectivity : Vertex connectivity the theorem assumes (0 for none).
        min_order : Order the theorem assumes (0 for none).

    """

    over: str
    measure: str
    conclusion: str
    connectivity: int = 0
    min_order: int = 0


SHAPES = {
    DIRAC: ConditionShape(OVER_VERTICES, MIN_DEGREE, HAMILTONIAN, min_order=3),
    ORE: ConditionShape(OVER_NONADJACENT, DEGREE_SUM, HAMILTONIAN, min_order=3),
    FAN_CLASSIC: ConditionShape(OVER_DISTANCE_TWO, MAX_DEGREE, HAMILTONIAN, connectivity=2),
    MCDIARMID_YOLOV: ConditionShape(OVER_VERTICES, MIN_DEGREE, HAMILTONIAN, min_order=3),
    ZHOU_ET_AL: ConditionShape(OVER_VERTICES, MIN_DEGREE, HAMILTONIAN_CONNECTED, min_order=3),
    LI_LIU_HAM: ConditionShape(OVER_NONADJACENT, DEGREE_SUM, HAMILTONIAN, connectivity=2, min_order=3),
    LI_LIU_HC: ConditionShape(OVER_NONADJACENT, DEGREE_SUM, HAMILTONIAN_CONNECTED, connectivity=3, min_order=3),
    FAN_TILDE: ConditionShape(OVER_DISTANCE_TWO, MAX_DEGREE, HAMILTONIAN),
    ADMISSIBLE: ConditionShape(OVER_DISTANCE_TWO, MAX_DEGREE, HAMILTONIAN_CONNECTED),
    THM_HAM: ConditionShape(OVER_DISTANCE_TWO, MAX_DEGREE, HAMILTONIAN, connectivity=2, min_order=3),
    # No order floor is stated; 3-connectivity already forces n >= 4.
    THM_HC: ConditionShape(OVER_DISTANCE_TWO, MAX_DEGREE, HAMILTONIAN_CONNECTED, connectivity=3),
}

SIDE_ORDER = "order>={}"
SIDE_CONNECTED = "{}-connected"
