from src.f2.bits import BitVector, BitMatrix
from src.f2.gray import GrayStep, gray_code, gray_sequence
from src.f2.reduction import (
    InconsistentSystemError,
    RowReductionRecord,
    RowsDependentError,
    SingularMatrixError,
    invert,
    null_space_basis,
    rank,
    right_pseudoinverse,
    rref,
    solve,
)

__all__ = [
    "BitVector",
    "BitMatrix",
    "GrayStep",
    "gray_code",
    "gray_sequence",
    "InconsistentSystemError",
    "RowReductionRecord",
    "RowsDependentError",
    "SingularMatrixError",
    "invert",
    "null_space_basis",
    "rank",
    "right_pseudoinverse",
    "rref",
    "solve",
]
