from fan_tilde.rewrite_engine.driver import FALLBACK
from fan_tilde.rewrite_engine.driver import Construction
from fan_tilde.rewrite_engine.driver import Trace
from fan_tilde.rewrite_engine.driver import TraceStep
from fan_tilde.rewrite_engine.driver import choose_virtual_edge
from fan_tilde.rewrite_engine.driver import construct_hamilton_cycle
from fan_tilde.rewrite_engine.driver import construct_hamilton_path
from fan_tilde.rewrite_engine.driver import find_closing_witness
from fan_tilde.rewrite_engine.driver import find_extension
from fan_tilde.rewrite_engine.driver import find_hp_witness
from fan_tilde.rewrite_engine.driver import find_rotation_witnesses
from fan_tilde.rewrite_engine.driver import replay_trace
from fan_tilde.rewrite_engine.lemmas import check_crossing_lemmas
from fan_tilde.rewrite_engine.lemmas import check_rotation_lemmas
from fan_tilde.rewrite_engine.lemmas import check_split_lemmas
from fan_tilde.rewrite_engine.neighbor_split import NeighborSplit
from fan_tilde.rewrite_engine.neighbor_split import compute_neighbor_split
from fan_tilde.rewrite_engine.rules import RewriteRule
from fan_tilde.rewrite_engine.rules import apply_rewrite
from fan_tilde.rewrite_engine.rules import ctl_witness
from fan_tilde.rewrite_engine.rules import first_witness
from fan_tilde.rewrite_engine.rules import iter_witnesses

__all__ = [
    "FALLBACK",
    "Construction",
    "NeighborSplit",
    "RewriteRule",
    "Trace",
    "TraceStep",
    "apply_rewrite",
    "check_crossing_lemmas",
    "check_rotation_lemmas",
    "check_split_lemmas",
    "choose_virtual_edge",
    "compute_neighbor_split",
    "construct_hamilton_cycle",
    "construct_hamilton_path",
    "ctl_witness",
    "find_closing_witness",
    "find_extension",
    "find_hp_witness",
    "find_rotation_witnesses",
    "first_witness",
    "iter_witnesses",
    "replay_trace",
]
