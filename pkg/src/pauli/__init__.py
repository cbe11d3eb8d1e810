from src.pauli.amplitudes import AmplitudeVector, apply, apply_array, applied_entry, bits_of, index_of, parity, qubit_count
from src.pauli.operator import (
    OracleLimitError,
    PauliLiteralError,
    PauliOperator,
    QubitCountMismatchError,
    commutes,
    format_pauli,
    multiply,
    parse_pauli,
    power_product,
    to_dense,
)

__all__ = [
    "AmplitudeVector",
    "apply",
    "apply_array",
    "applied_entry",
    "bits_of",
    "index_of",
    "parity",
    "qubit_count",
    "OracleLimitError",
    "PauliLiteralError",
    "PauliOperator",
    "QubitCountMismatchError",
    "commutes",
    "format_pauli",
    "multiply",
    "parse_pauli",
    "power_product",
    "to_dense",
]
