from src.clifford.circuits import Gate, circuit_matrix, circuit_tableau, conjugate, gate_matrix, random_check_matrix, random_circuit
from src.clifford.diagnosis import CliffordDiagnosis, CliffordFailure
from src.clifford.extraction import matrix_to_tableau, tableau_to_matrix, verify_clifford_matrix
from src.clifford.tableau import (
    CliffordMatrix,
    ExtractionFailedError,
    InvalidTableauError,
    Tableau,
    TableauRow,
    is_valid_tableau,
    tableau_violation,
)

__all__ = [
    "Gate",
    "circuit_matrix",
    "circuit_tableau",
    "conjugate",
    "gate_matrix",
    "random_check_matrix",
    "random_circuit",
    "CliffordDiagnosis",
    "CliffordFailure",
    "matrix_to_tableau",
    "tableau_to_matrix",
    "verify_clifford_matrix",
    "CliffordMatrix",
    "ExtractionFailedError",
    "InvalidTableauError",
    "Tableau",
    "TableauRow",
    "is_valid_tableau",
    "tableau_violation",
]
