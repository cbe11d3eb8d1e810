from src.oracle.brute_force import (
    brute_check_to_amplitudes,
    brute_is_clifford,
    brute_is_stabiliser,
    brute_stabiliser_group,
    brute_tableau,
    enumerate_stabiliser_states,
)
from src.pauli import OracleLimitError

__all__ = [
    "brute_check_to_amplitudes",
    "brute_is_clifford",
    "brute_is_stabiliser",
    "brute_stabiliser_group",
    "brute_tableau",
    "enumerate_stabiliser_states",
    "OracleLimitError",
]
