from fan_tilde.ham_solver.paths import CYCLE
from fan_tilde.ham_solver.paths import PATH
from fan_tilde.ham_solver.paths import Cycle
from fan_tilde.ham_solver.paths import HamCertificate
from fan_tilde.ham_solver.paths import OrientedPath
from fan_tilde.ham_solver.solver import ConnectedResult
from fan_tilde.ham_solver.solver import hamilton_cycle
from fan_tilde.ham_solver.solver import hamilton_path_between
from fan_tilde.ham_solver.solver import is_hamiltonian_connected
from fan_tilde.ham_solver.solver import longest_path_from

__all__ = [
    "CYCLE",
    "PATH",
    "ConnectedResult",
    "Cycle",
    "HamCertificate",
    "OrientedPath",
    "hamilton_cycle",
    "hamilton_path_between",
    "is_hamiltonian_connected",
    "longest_path_from",
]
