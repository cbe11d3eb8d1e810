from src.stabiliser.amplitudes import (
    amplitudes_to_triple,
    form_exponents,
    scaled_amplitudes,
    span_labels,
    triple_to_amplitudes,
    verify_stabiliser_vector,
)
from src.stabiliser.check import amplitudes_to_check, check_to_amplitudes, check_to_triple, triple_to_check
from src.stabiliser.diagnosis import StabiliserDiagnosis, StabiliserFailure, Verdict
from src.stabiliser.types import (
    AffineSubspaceTriple,
    CheckMatrix,
    CheckRow,
    InvalidCheckMatrixError,
    InvalidTripleError,
    NotAStabiliserStateError,
    is_valid_check_matrix,
    validate_check_matrix,
)

__all__ = [
    "amplitudes_to_triple",
    "form_exponents",
    "scaled_amplitudes",
    "span_labels",
    "triple_to_amplitudes",
    "verify_stabiliser_vector",
    "amplitudes_to_check",
    "check_to_amplitudes",
    "check_to_triple",
    "triple_to_check",
    "StabiliserDiagnosis",
    "StabiliserFailure",
    "Verdict",
    "AffineSubspaceTriple",
    "CheckMatrix",
    "CheckRow",
    "InvalidCheckMatrixError",
    "InvalidTripleError",
    "NotAStabiliserStateError",
    "is_valid_check_matrix",
    "validate_check_matrix",
]
